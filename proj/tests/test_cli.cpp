#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "stairs/cli.hpp"
#include "stairs/parse.hpp"

using namespace stairs;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

// The JSON payload of an output line "prefix: {...}".
nlohmann::json json_after(const std::string& text, const std::string& prefix) {
  for (const std::string& line : lines_of(text)) {
    if (line.rfind(prefix, 0) == 0) {
      return nlohmann::json::parse(line.substr(prefix.size()));
    }
  }
  REQUIRE(false);
  return {};
}

bool has_line(const std::string& text, const std::string& wanted) {
  for (const std::string& line : lines_of(text)) {
    if (line == wanted) return true;
  }
  return false;
}

const std::string kC = "y^4,x*y^2,x^2*y,x^5";
const std::string kG = "y^5,x*y^2,x^3";

}  // namespace

TEST_CASE("enumerate lists the stratum") {
  RunResult r = run({"enumerate", "--hilbert", "1,2,3,2,1"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  std::vector<std::string> lines = lines_of(r.out);
  CHECK(lines.size() == 9);
  bool found = false;
  for (const std::string& line : lines) {
    CHECK(line.find("  profile=[") != std::string::npos);
    if (line.rfind("y^3,x^3  profile=", 0) == 0) found = true;
  }
  CHECK(found);

  RunResult empty = run({"enumerate", "--hilbert", "2"});
  CHECK(empty.code == 0);
  CHECK(empty.out.empty());

  RunResult json = run({"enumerate", "--hilbert", "1,2,3,2,1", "--format", "json"});
  CHECK(json.code == 0);
  nlohmann::json j = nlohmann::json::parse(json.out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 9);
  CHECK(j[0].contains("generators"));
  CHECK(j[0].contains("profile"));
}

TEST_CASE("check reports the failing pair with exit code 1") {
  RunResult r = run({"check", kC, kG});
  CHECK(r.code == 1);
  CHECK(has_line(r.out, "yameogo: true"));
  CHECK(has_line(r.out, "cond1: true"));
  CHECK(has_line(r.out, "cond2: false"));
  CHECK(has_line(r.out, "box: 9x9"));
  CHECK(r.out.find("witness2:") == std::string::npos);

  nlohmann::json witness = json_after(r.out, "witness1: ");
  REQUIRE(witness.is_array());
  REQUIRE(witness.size() == 9);
  long long moved = 0;
  for (const auto& arrow : witness) {
    std::vector<int> origin = arrow.at("origin").get<std::vector<int>>();
    long long lambda = arrow.at("lambda").get<long long>();
    if (origin == std::vector<int>{3, 0}) {
      CHECK(lambda == -1);
      ++moved;
    } else if (origin == std::vector<int>{4, 0}) {
      CHECK(lambda == -4);
      ++moved;
    } else {
      CHECK(lambda == 0);
    }
  }
  CHECK(moved == 2);
}

TEST_CASE("check passes identical staircases and honors an explicit box") {
  RunResult same = run({"check", kC, kC});
  CHECK(same.code == 0);
  CHECK(has_line(same.out, "cond2: true"));

  RunResult boxed = run({"check", kC, kG, "--box", "10x10"});
  CHECK(boxed.code == 1);
  CHECK(has_line(boxed.out, "box: 10x10"));
  CHECK(has_line(boxed.out, "cond2: false"));
}

TEST_CASE("check emits exactly four json fields") {
  RunResult r = run({"check", kC, kG, "--format", "json"});
  CHECK(r.code == 1);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.size() == 4);
  CHECK(j.at("yameogo") == true);
  CHECK(j.at("cond1") == true);
  CHECK(j.at("cond2") == false);
  CHECK(j.at("box") == nlohmann::json::array({9, 9}));
}

TEST_CASE("usage and input errors exit with code 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check", kC}).code == 2);                       // missing F
  CHECK(run({"check", kC, "y,x"}).code == 2);                // size mismatch
  CHECK(run({"check", "y^3,,x", kG}).code == 2);             // malformed text
  CHECK(run({"check", kC, kG, "--box", "4x4"}).code == 2);   // box too small
  CHECK(run({"check", kC, kG, "--box", "9"}).code == 2);     // malformed box
  CHECK(run({"check", kC, kG, "--grading", "2,-2"}).code == 2);
  CHECK(run({"check", kC, kG, "--grading", "0,1"}).code == 2);
  CHECK(run({"enumerate", "--hilbert", "1,-2"}).code == 2);
  CHECK(run({"dual", "y^3,x^3", "--box", "2x2"}).code == 2);  // box too small
  CHECK(run({"verify", "/no/such/file.json", kC, kG}).code == 2);
  RunResult r = run({"check", kC, "y,x"});
  CHECK(r.err.rfind("error: ", 0) == 0);
}

TEST_CASE("the negated grading normalizes to the default") {
  RunResult r = run({"check", kC, kG, "--grading", "-1,1"});
  CHECK(r.code == 1);
  CHECK(has_line(r.out, "cond1: true"));
  CHECK(has_line(r.out, "cond2: false"));
}

TEST_CASE("help is printed on request") {
  RunResult r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("enumerate") != std::string::npos);
  CHECK(r.out.find("grassmann") != std::string::npos);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("grassmann sweeps report the equivalence") {
  RunResult r = run({"grassmann", "--n", "2", "--k", "2"});
  CHECK(r.code == 0);
  std::vector<std::string> lines = lines_of(r.out);
  REQUIRE_FALSE(lines.empty());
  CHECK(lines.front() == "p | q | classical | cond1 | cond2");
  CHECK(lines.back() == "equivalent: yes");
  CHECK(has_line(r.out, "(0,0) | (1,1) | true | true | true"));
  CHECK(has_line(r.out, "(1,1) | (0,0) | false | false | false"));
  CHECK(lines.size() == 11);  // header + nine pairs + verdict

  CHECK(run({"grassmann", "--n", "4", "--k", "2"}).code == 2);
  CHECK(run({"grassmann", "--n", "3", "--k", "5", "--budget", "10"}).code == 2);
}

TEST_CASE("verify certifies the bundled family T") {
  std::string family = std::string(STAIRS_DATA_DIR) + "/family_T.json";
  RunResult r = run({"verify", family, "y^3,x^2*y,x^5", "y^5,x*y^2,x^2*y,x^4"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "family: T"));
  CHECK(has_line(r.out, "generic: y^3,x^2*y,x^5 (matches)"));
  CHECK(has_line(r.out, "limit: y^5,x*y^2,x^2*y,x^4 (matches)"));
  CHECK(has_line(r.out, "ranks: [0,0,0,2,4]"));
  CHECK(has_line(r.out, "closure: ok"));
  CHECK(has_line(r.out, "result: pass"));
  nlohmann::json arrows = json_after(r.out, "cosystem: ok ");
  REQUIRE(arrows.is_array());
  REQUIRE(arrows.size() == 3);
  CHECK(arrows[0].at("origin") == nlohmann::json::array({0, 3}));
  CHECK(arrows[0].at("lambda") == 1);
  CHECK(arrows[2].at("origin") == nlohmann::json::array({1, 3}));
  CHECK(arrows[2].at("lambda") == 3);
}

TEST_CASE("verify flags a wrong limit with exit code 1") {
  std::string family = std::string(STAIRS_DATA_DIR) + "/family_T.json";
  RunResult r = run({"verify", family, "y^3,x^2*y,x^5", "y^3,x^3"});
  CHECK(r.code == 1);
  CHECK(r.out.find("limit: y^5,x*y^2,x^2*y,x^4 (MISMATCH)") != std::string::npos);
  CHECK(has_line(r.out, "result: fail"));
}

TEST_CASE("dual complements staircases in boxes") {
  RunResult r = run({"dual", kC, "--box", "5x5"});
  CHECK(r.code == 0);
  CHECK(r.out == "y^4,x^3*y^3,x^4*y,x^5\n");

  RunResult g5 = run({"dual", kG, "--box", "5x5"});
  CHECK(g5.out == "y^5,x^2*y^3,x^4\n");

  RunResult def = run({"dual", kC});  // default box is 9x9
  CHECK(def.code == 0);
  CHECK(def.out == "y^9,x^4*y^8,x^7*y^7,x^8*y^5,x^9\n");

  RunResult j = run({"dual", kC, "--box", "5x5", "--format", "json"});
  Staircase parsed = staircase_from_json(nlohmann::json::parse(j.out));
  CHECK(parsed == staircase_from_text("y^4,x^3*y^3,x^4*y,x^5"));
}

TEST_CASE("profile prints the counting profile") {
  RunResult r = run({"profile", kC});
  CHECK(r.code == 0);
  CHECK(r.out == "[1,2,3,4,5,6,7,7,7,8,9]\n");

  RunResult graded = run({"profile", "y,x^2", "--grading", "2,-1"});
  CHECK(graded.code == 0);
  nlohmann::json j = nlohmann::json::parse(graded.out);
  CHECK(j.is_array());
  CHECK(j.back() == 2);
}

TEST_CASE("atlas prints dot by default and json on request") {
  RunResult dot = run({"atlas", "--hilbert", "1,2,1"});
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("digraph atlas {", 0) == 0);
  CHECK(dot.err.empty());

  RunResult json = run({"atlas", "--hilbert", "1,2,1", "--format", "json"});
  CHECK(json.code == 0);
  nlohmann::json j = nlohmann::json::parse(json.out);
  CHECK(j.at("nodes").size() == 3);
  CHECK(j.at("edges").size() == 3);
}

TEST_CASE("atlas caching round trips and reports corruption") {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "stairs-cli-cache-test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::string cache = dir.string();

  RunResult first = run({"atlas", "--hilbert", "1,2,1", "--cache-dir", cache});
  CHECK(first.code == 0);
  CHECK(first.err.empty());
  std::filesystem::path file = dir / "atlas-g1,-1_h1,2,1.json";
  REQUIRE(std::filesystem::exists(file));

  RunResult second = run({"atlas", "--hilbert", "1,2,1", "--cache-dir", cache});
  CHECK(second.code == 0);
  CHECK(second.err.empty());
  CHECK(second.out == first.out);

  std::ofstream(file) << "garbage";
  RunResult third = run({"atlas", "--hilbert", "1,2,1", "--cache-dir", cache});
  CHECK(third.code == 0);
  CHECK(third.out == first.out);
  CHECK(third.err.find("corrupt atlas cache") != std::string::npos);

  RunResult fourth = run({"atlas", "--hilbert", "1,2,1", "--cache-dir", cache});
  CHECK(fourth.err.empty());  // the rebuild repaired the cache
  std::filesystem::remove_all(dir);
}
