#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "stairs/errors.hpp"
#include "stairs/parse.hpp"
#include "stairs/staircase.hpp"

using namespace stairs;

namespace {

// Brute-force staircase enumeration: all downward-closed subsets of a small
// support region, grouped by Hilbert function.
std::map<std::vector<long long>, std::set<std::vector<Monomial>>> brute_by_hilbert(
    const Grading& g, int max_cells) {
  std::vector<Monomial> region;
  for (int i = 0; i <= max_cells; ++i) {
    for (int j = 0; j <= max_cells; ++j) {
      if ((i + 1) * (j + 1) <= max_cells) region.push_back(Monomial{i, j});
    }
  }
  std::map<std::vector<long long>, std::set<std::vector<Monomial>>> out;
  size_t n = region.size();
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    std::vector<Monomial> cells;
    for (size_t i = 0; i < n; ++i) {
      if (mask & (size_t{1} << i)) cells.push_back(region[i]);
    }
    if (static_cast<int>(cells.size()) > max_cells) continue;
    if (!is_staircase(cells)) continue;
    Staircase s{cells};
    out[hilbert_function(g, s).values()].insert(s.cells());
  }
  return out;
}

}  // namespace

TEST_CASE("staircase construction validates downward closure") {
  CHECK(is_staircase({Monomial{0, 0}, Monomial{1, 0}, Monomial{0, 1}}));
  CHECK_FALSE(is_staircase({Monomial{0, 0}, Monomial{1, 1}}));
  CHECK_FALSE(is_staircase({Monomial{1, 0}}));
  CHECK_FALSE(is_staircase({Monomial{0, 0}, Monomial{0, 0}}));
  CHECK(is_staircase({}));
  CHECK_THROWS_AS(Staircase(std::vector<Monomial>{Monomial{1, 0}}),
                  std::invalid_argument);
}

TEST_CASE("generators of the nine-cell staircase round trip") {
  Staircase a = staircase_from_text("y^3,x^2*y,x^5");
  CHECK(a.size() == 9);
  CHECK(to_text(minimal_generators(a)) == "y^3,x^2*y,x^5");
  CHECK(hilbert_function(Grading{1, -1}, a) ==
        HilbertFunction{{1, 2, 3, 2, 1}});
  CHECK(a.contains(Monomial{1, 2}));
  CHECK_FALSE(a.contains(Monomial{2, 1}));
}

TEST_CASE("ideals without both pure powers have infinite colength") {
  CHECK_THROWS_AS(staircase_from_generators({Monomial{0, 2}, Monomial{1, 1}}),
                  ValidationError);
  CHECK_THROWS_AS(staircase_from_generators({Monomial{3, 0}}), ValidationError);
  CHECK(staircase_from_generators({Monomial{0, 0}}).empty());
  CHECK(staircase_from_generators({Monomial{1, 0}, Monomial{0, 1}}).size() == 1);
}

TEST_CASE("enumerate_staircases matches known counts") {
  Grading g{1, -1};
  CHECK(enumerate_staircases(g, HilbertFunction{{1, 2, 3, 2, 1}}).size() == 9);
  CHECK(enumerate_staircases(g, HilbertFunction{{1, 1, 1}}).size() == 2);
  CHECK(enumerate_staircases(g, HilbertFunction{{1, 2, 1}}).size() == 3);
  CHECK(enumerate_staircases(g, HilbertFunction{{2}}).empty());
  CHECK(enumerate_staircases(g, HilbertFunction{{1, 3}}).empty());
  CHECK(enumerate_staircases(g, HilbertFunction{{}}).size() == 1);
}

TEST_CASE("enumerate_staircases agrees with brute subset filtering") {
  for (Grading g : {Grading{1, -1}, Grading{2, -1}}) {
    auto brute = brute_by_hilbert(g, 5);
    for (const auto& [values, cell_sets] : brute) {
      std::vector<Staircase> enumerated =
          enumerate_staircases(g, HilbertFunction{values});
      REQUIRE(enumerated.size() == cell_sets.size());
      for (const Staircase& s : enumerated) {
        CHECK(cell_sets.count(s.cells()) == 1);
      }
      CHECK(std::is_sorted(enumerated.begin(), enumerated.end()));
    }
  }
}

TEST_CASE("dual matches the worked five-by-five example") {
  Box box{5, 5};
  Staircase c = staircase_from_text("y^4,x*y^2,x^2*y,x^5");
  Staircase g = staircase_from_text("y^5,x*y^2,x^3");
  CHECK(to_text(minimal_generators(dual(c, box))) == "y^4,x^3*y^3,x^4*y,x^5");
  CHECK(to_text(minimal_generators(dual(g, box))) == "y^5,x^2*y^3,x^4");
  CHECK(dual(c, box).size() == 25 - c.size());
}

TEST_CASE("dual requires the staircase to fit") {
  Staircase c = staircase_from_text("y^4,x*y^2,x^2*y,x^5");
  CHECK_THROWS_AS(dual(c, Box{4, 4}), FitError);
  CHECK(dual(Staircase{}, Box{1, 1}).size() == 1);
}

TEST_CASE("dual is an involution on all small staircases") {
  Grading g{1, -1};
  for (const auto& [values, cell_sets] : brute_by_hilbert(g, 6)) {
    (void)values;
    for (const std::vector<Monomial>& cells : cell_sets) {
      Staircase e{cells};
      for (int m = 1; m <= 6; ++m) {
        for (int n = 1; n <= 6; ++n) {
          if (!e.fits(Box{m, n})) continue;
          Staircase d = dual(e, Box{m, n});
          CHECK(static_cast<int>(d.size()) == m * n - static_cast<int>(e.size()));
          CHECK(dual(d, Box{m, n}) == e);
        }
      }
    }
  }
}

TEST_CASE("colon ideal agrees with the dual generators") {
  Staircase one = staircase_from_generators({Monomial{1, 0}, Monomial{0, 1}});
  CHECK(to_text(monomial_colon(one, Box{2, 2})) == "y^2,x*y,x^2");
  Grading g{1, -1};
  for (const auto& [values, cell_sets] : brute_by_hilbert(g, 6)) {
    (void)values;
    for (const std::vector<Monomial>& cells : cell_sets) {
      Staircase e{cells};
      for (int m = 1; m <= 6; ++m) {
        for (int n = 1; n <= 6; ++n) {
          if (!e.fits(Box{m, n})) continue;
          CHECK(monomial_colon(e, Box{m, n}) ==
                minimal_generators(dual(e, Box{m, n})));
        }
      }
    }
  }
}

TEST_CASE("hilbert function values are trimmed and summed") {
  HilbertFunction h{{1, 2, 0, 0}};
  CHECK(h.length() == 2);
  CHECK(h == HilbertFunction{{1, 2}});
  CHECK(h.total() == 3);
  CHECK(h.at(10) == 0);
  CHECK_THROWS_AS(HilbertFunction(std::vector<long long>{1, -1}),
                  std::invalid_argument);
}

TEST_CASE("staircase json round trip") {
  Staircase a = staircase_from_text("y^3,x^2*y,x^5");
  CHECK(staircase_from_json(to_json(a)) == a);
  CHECK(to_json(a).at("generators").size() == 3);
  CHECK(staircase_from_json(to_json(Staircase{})) == Staircase{});
}
