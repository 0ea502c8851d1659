#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "stairs/monomial.hpp"
#include "stairs/staircase.hpp"

namespace stairs {

struct AtlasOptions {
  // Directory holding bundled name maps and witness families; empty disables
  // annotation.
  std::string data_dir;
};

struct AtlasEdge {
  size_t from = 0;
  size_t to = 0;
  bool cond1 = false;
  bool cond2 = false;
  std::string witness;  // name of a bundled family certifying the edge
  bool operator==(const AtlasEdge&) const = default;
};

// Directed graph of incidence candidates: one node per staircase, one edge
// per ordered pair passing the profile-dominance test, with both staircase
// conditions recorded on every edge.
struct AtlasGraph {
  Grading grading{1, -1};
  HilbertFunction hilbert{{}};
  std::vector<Staircase> nodes;     // canonical enumeration order
  std::vector<std::string> labels;  // generator text, prefixed by a bundled name when known
  std::vector<AtlasEdge> edges;     // ordered by (from, to)
};

AtlasGraph build_atlas(const Grading& g, const HilbertFunction& h,
                       const AtlasOptions& options = {});

// Valid DOT text: solid edges where both conditions hold, dashed where only
// dominance holds; witnessed edges carry the family name as a tooltip.
std::string atlas_dot(const AtlasGraph& graph);

nlohmann::json atlas_json(const AtlasGraph& graph);

std::string atlas_cache_key(const Grading& g, const HilbertFunction& h);

// Returns the cached atlas when an intact cache file exists; a corrupt file
// produces a warning on the given stream and nothing.
std::optional<AtlasGraph> load_cached_atlas(const std::string& cache_dir,
                                            const Grading& g,
                                            const HilbertFunction& h,
                                            std::ostream& warnings);

void store_atlas_cache(const std::string& cache_dir, const AtlasGraph& graph);

// Cache-through build: rereads an intact cache, otherwise builds and stores.
AtlasGraph atlas_with_cache(const Grading& g, const HilbertFunction& h,
                            const std::string& cache_dir,
                            const AtlasOptions& options, std::ostream& warnings);

}  // namespace stairs
