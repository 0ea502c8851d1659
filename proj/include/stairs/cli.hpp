#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stairs {

// Runs the command-line tool on the given arguments (program name excluded),
// writing regular output and diagnostics to the given streams.  Returns the
// process exit code: 0 when the request succeeds and any checked condition
// holds, 1 when a checked condition fails or a verification mismatches, 2 on
// usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace stairs
