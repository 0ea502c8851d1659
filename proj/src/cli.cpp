#include "stairs/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stairs/arrows.hpp"
#include "stairs/atlas.hpp"
#include "stairs/errors.hpp"
#include "stairs/family.hpp"
#include "stairs/grassmannian.hpp"
#include "stairs/parse.hpp"
#include "stairs/profile.hpp"

#ifndef STAIRS_DATA_DIR
#define STAIRS_DATA_DIR ""
#endif

namespace stairs {

namespace {

nlohmann::json witness_json(const ArrowSystem& s) {
  nlohmann::json list = nlohmann::json::array();
  for (size_t i = 0; i < s.base().size(); ++i) {
    Arrow f = s.arrow(i);
    list.push_back(nlohmann::json{{"origin", {f.origin.alpha, f.origin.beta}},
                                  {"lambda", f.lambda}});
  }
  return list;
}

std::string partition_text(const std::vector<int>& p) {
  std::string out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(p[i]);
  }
  return out;
}

int cmd_enumerate(const std::string& hilbert, const std::string& grading,
                  const std::string& format, std::ostream& out) {
  Grading g = grading_from_text(grading);
  HilbertFunction h = hilbert_from_text(hilbert);
  std::vector<Staircase> staircases = enumerate_staircases(g, h);
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const Staircase& s : staircases) {
      j.push_back(nlohmann::json{{"generators", to_text(minimal_generators(s))},
                                 {"profile", profile(g, s).values}});
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  for (const Staircase& s : staircases) {
    out << to_text(minimal_generators(s)) << "  profile="
        << nlohmann::json(profile(g, s).values).dump() << "\n";
  }
  return 0;
}

int cmd_check(const std::string& e_text, const std::string& f_text,
              const std::string& grading, const std::string& box_text,
              const std::string& format, std::ostream& out) {
  Grading g = grading_from_text(grading);
  Staircase e = staircase_from_text(e_text);
  Staircase f = staircase_from_text(f_text);
  std::optional<Box> box;
  if (!box_text.empty()) box = box_from_text(box_text);
  NecessaryConditionReport report = necessary_condition(g, e, f, box);
  if (format == "json") {
    nlohmann::json j{{"yameogo", report.yameogo},
                     {"cond1", report.cond1},
                     {"cond2", report.cond2},
                     {"box", {report.box.m, report.box.n}}};
    out << j.dump(2) << "\n";
  } else {
    out << "yameogo: " << (report.yameogo ? "true" : "false") << "\n";
    out << "cond1: " << (report.cond1 ? "true" : "false") << "\n";
    out << "cond2: " << (report.cond2 ? "true" : "false") << "\n";
    out << "box: " << report.box.m << "x" << report.box.n << "\n";
    if (report.witness1) {
      out << "witness1: " << witness_json(*report.witness1).dump() << "\n";
    }
    if (report.witness2) {
      out << "witness2: " << witness_json(*report.witness2).dump() << "\n";
    }
  }
  return report.holds() ? 0 : 1;
}

int cmd_atlas(const std::string& hilbert, const std::string& grading,
              const std::string& format, const std::string& cache_dir,
              const std::string& data_dir, std::ostream& out, std::ostream& err) {
  Grading g = grading_from_text(grading);
  HilbertFunction h = hilbert_from_text(hilbert);
  AtlasOptions options;
  options.data_dir = data_dir;
  AtlasGraph graph = atlas_with_cache(g, h, cache_dir, options, err);
  if (format == "json") {
    out << atlas_json(graph).dump(2) << "\n";
  } else {
    out << atlas_dot(graph);
  }
  return 0;
}

int cmd_verify(const std::string& family_file, const std::string& e_text,
               const std::string& f_text, const std::string& box_text,
               std::ostream& out) {
  GradedFamily family = family_from_file(family_file);
  Staircase from = staircase_from_text(e_text);
  Staircase to = staircase_from_text(f_text);
  std::optional<Box> box;
  if (!box_text.empty()) box = box_from_text(box_text);
  LimitReport report = verify_witness(family, from, to, box);
  if (!family.name().empty()) out << "family: " << family.name() << "\n";
  out << "generic: " << to_text(minimal_generators(report.generic))
      << (report.generic_matches ? " (matches)" : " (MISMATCH)") << "\n";
  out << "limit: " << to_text(minimal_generators(report.limit))
      << (report.limit_matches ? " (matches)" : " (MISMATCH)") << "\n";
  out << "ranks: " << nlohmann::json(report.per_degree_ranks).dump() << "\n";
  out << "closure: " << (report.closure_ok ? "ok" : "FAILED") << "\n";
  if (report.extracted) {
    nlohmann::json arrows = nlohmann::json::array();
    for (const Arrow& f : report.extracted->listed()) {
      arrows.push_back(nlohmann::json{{"origin", {f.origin.alpha, f.origin.beta}},
                                      {"lambda", f.lambda}});
    }
    out << "cosystem: " << (report.cosystem_ok ? "ok " : "FAILED ") << arrows.dump()
        << "\n";
  }
  out << "result: " << (report.passed() ? "pass" : "fail") << "\n";
  return report.passed() ? 0 : 1;
}

int cmd_grassmann(int n, int k, long long budget, std::ostream& out) {
  GrassmannSweep sweep = verify_equivalence(n, k, budget);
  out << "p | q | classical | cond1 | cond2\n";
  for (const GrassmannRow& row : sweep.rows) {
    out << "(" << partition_text(row.from.p) << ") | (" << partition_text(row.to.p)
        << ") | " << (row.classical ? "true" : "false") << " | "
        << (row.cond1 ? "true" : "false") << " | " << (row.cond2 ? "true" : "false")
        << "\n";
  }
  out << "equivalent: " << (sweep.equivalent ? "yes" : "no") << "\n";
  return sweep.equivalent ? 0 : 1;
}

int cmd_dual(const std::string& e_text, const std::string& box_text,
             const std::string& grading, const std::string& format,
             std::ostream& out) {
  grading_from_text(grading);  // validated for interface symmetry
  Staircase e = staircase_from_text(e_text);
  int side = std::max<int>(1, static_cast<int>(e.size()));
  Box box = box_text.empty() ? Box{side, side} : box_from_text(box_text);
  Staircase d = dual(e, box);
  if (format == "json") {
    out << to_json(d).dump() << "\n";
  } else {
    out << to_text(minimal_generators(d)) << "\n";
  }
  return 0;
}

int cmd_profile(const std::string& e_text, const std::string& grading,
                std::ostream& out) {
  Grading g = grading_from_text(grading);
  Staircase e = staircase_from_text(e_text);
  out << nlohmann::json(profile(g, e).values).dump() << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"staircase incidence toolkit for torus-fixed ideals in the plane"};
  app.require_subcommand(1);

  std::string hilbert;
  std::string grading = "1,-1";
  std::string box_text;
  std::string format;
  std::string cache_dir;
  std::string data_dir = STAIRS_DATA_DIR;
  std::string e_text, f_text, family_file;
  int n = 0, k = 0;
  long long budget = 200000;

  CLI::App* enumerate = app.add_subcommand("enumerate", "list the staircases of a Hilbert function");
  enumerate->add_option("--hilbert", hilbert, "Hilbert function h0,h1,...")->required();
  enumerate->add_option("--grading", grading, "grading a,b");
  enumerate->add_option("--format", format, "text or json");

  CLI::App* check = app.add_subcommand("check", "run the incidence necessary condition on a staircase pair");
  check->add_option("E", e_text, "source staircase generators")->required();
  check->add_option("F", f_text, "target staircase generators")->required();
  check->add_option("--grading", grading, "grading a,b");
  check->add_option("--box", box_text, "box MxN for the dual side");
  check->add_option("--format", format, "text or json");

  CLI::App* atlas = app.add_subcommand("atlas", "build the incidence-candidate digraph");
  atlas->add_option("--hilbert", hilbert, "Hilbert function h0,h1,...")->required();
  atlas->add_option("--grading", grading, "grading a,b");
  atlas->add_option("--format", format, "dot or json");
  atlas->add_option("--cache-dir", cache_dir, "cache directory");
  atlas->add_option("--data-dir", data_dir, "directory with bundled names and families");

  CLI::App* verify = app.add_subcommand("verify", "certify a degeneration family against a staircase pair");
  verify->add_option("family", family_file, "family JSON file")->required();
  verify->add_option("E", e_text, "expected generic staircase generators")->required();
  verify->add_option("F", f_text, "expected limit staircase generators")->required();
  verify->add_option("--box", box_text, "box MxN for the extracted co-arrow system");

  CLI::App* grassmann = app.add_subcommand("grassmann", "compare classical Schubert incidence with both conditions");
  grassmann->add_option("--n", n, "number of rows of the partitions")->required();
  grassmann->add_option("--k", k, "ambient dimension minus one")->required();
  grassmann->add_option("--budget", budget, "maximum number of pairs");

  CLI::App* dual_cmd = app.add_subcommand("dual", "complement a staircase in a box");
  dual_cmd->add_option("E", e_text, "staircase generators")->required();
  dual_cmd->add_option("--box", box_text, "box MxN");
  dual_cmd->add_option("--grading", grading, "grading a,b");
  dual_cmd->add_option("--format", format, "text or json");

  CLI::App* profile_cmd = app.add_subcommand("profile", "print the counting profile of a staircase");
  profile_cmd->add_option("E", e_text, "staircase generators")->required();
  profile_cmd->add_option("--grading", grading, "grading a,b");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(hilbert, grading, format, out);
    if (check->parsed()) return cmd_check(e_text, f_text, grading, box_text, format, out);
    if (atlas->parsed()) {
      if (format.empty()) format = "dot";
      return cmd_atlas(hilbert, grading, format, cache_dir, data_dir, out, err);
    }
    if (verify->parsed()) return cmd_verify(family_file, e_text, f_text, box_text, out);
    if (grassmann->parsed()) return cmd_grassmann(n, k, budget, out);
    if (dual_cmd->parsed()) return cmd_dual(e_text, box_text, grading, format, out);
    if (profile_cmd->parsed()) return cmd_profile(e_text, grading, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ClosureError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const DependenceError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace stairs
