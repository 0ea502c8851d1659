#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "stairs/errors.hpp"
#include "stairs/grassmannian.hpp"
#include "stairs/parse.hpp"

using namespace stairs;

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

}  // namespace

TEST_CASE("hilbert functions of the plane sections") {
  CHECK(grassmannian_hilbert_function(2, 2) == HilbertFunction{{1, 2, 1}});
  CHECK(grassmannian_hilbert_function(1, 3) == HilbertFunction{{1, 2, 3, 3}});
  CHECK(grassmannian_hilbert_function(3, 5) == HilbertFunction{{1, 2, 3, 4, 5, 3}});
  // n = k+1 drops the trailing zero
  CHECK(grassmannian_hilbert_function(3, 2) == HilbertFunction{{1, 2}});
  CHECK(grassmannian_hilbert_function(2, 2).total() == 4);
}

TEST_CASE("parameter ranges are checked") {
  CHECK_THROWS_AS(check_grassmann_range(0, 2), DomainError);
  CHECK_THROWS_AS(check_grassmann_range(2, 0), DomainError);
  CHECK_THROWS_AS(check_grassmann_range(3, 1), DomainError);
  CHECK_NOTHROW(check_grassmann_range(2, 1));
  CHECK_NOTHROW(check_grassmann_range(3, 2));
  CHECK_THROWS_AS(all_indices(0, 2), DomainError);
  CHECK_THROWS_AS(verify_equivalence(4, 2), DomainError);
}

TEST_CASE("cell indices enumerate partitions in a box") {
  std::vector<SchubertIndex> idx = all_indices(2, 2);
  REQUIRE(idx.size() == 3);
  CHECK(idx[0].p == std::vector<int>{1, 1});
  CHECK(idx[1].p == std::vector<int>{1, 0});
  CHECK(idx[2].p == std::vector<int>{0, 0});
  for (int k = 1; k <= 5; ++k) {
    for (int n = 1; n <= k + 1; ++n) {
      CHECK(all_indices(n, k).size() ==
            static_cast<size_t>(binomial(k + 1, n)));
    }
  }
}

TEST_CASE("staircases of the three cells on the projective plane") {
  auto stair = [](std::vector<int> p) {
    return schubert_staircase(SchubertIndex{2, 2, std::move(p)});
  };
  CHECK(stair({0, 0}) == staircase_from_text("y^2,x*y,x^3"));   // keeps x^2
  CHECK(stair({1, 0}) == staircase_from_text("y^2,x^2"));       // keeps x*y
  CHECK(stair({1, 1}) == staircase_from_text("y^3,x*y,x^2"));   // keeps y^2
}

TEST_CASE("index-to-staircase is a bijection onto the hilbert stratum") {
  Grading g{1, -1};
  for (int k = 1; k <= 4; ++k) {
    for (int n = 1; n <= k + 1; ++n) {
      CAPTURE(n);
      CAPTURE(k);
      HilbertFunction h = grassmannian_hilbert_function(n, k);
      std::set<Staircase> image;
      for (const SchubertIndex& idx : all_indices(n, k)) {
        Staircase e = schubert_staircase(idx);
        CHECK(hilbert_function(g, e) == h);
        CHECK(image.insert(e).second);  // injective
      }
      std::vector<Staircase> stratum = enumerate_staircases(g, h);
      CHECK(image.size() == stratum.size());
      for (const Staircase& e : stratum) CHECK(image.count(e) == 1);
    }
  }
}

TEST_CASE("classical incidence order") {
  SchubertIndex p00{2, 2, {0, 0}};
  SchubertIndex p10{2, 2, {1, 0}};
  SchubertIndex p11{2, 2, {1, 1}};
  CHECK(classical_leq(p00, p11));
  CHECK_FALSE(classical_leq(p11, p00));
  CHECK(classical_leq(p10, p10));
  SchubertIndex a{2, 3, {2, 0}};
  SchubertIndex b{2, 3, {1, 1}};
  CHECK_FALSE(classical_leq(a, b));
  CHECK_FALSE(classical_leq(b, a));
}

TEST_CASE("both conditions recover the classical order") {
  GrassmannSweep sweep = verify_equivalence(2, 2);
  CHECK(sweep.equivalent);
  CHECK_FALSE(sweep.first_mismatch.has_value());
  CHECK(sweep.rows.size() == 9);
  bool found = false;
  for (const GrassmannRow& row : sweep.rows) {
    CHECK(row.agree());
    if (row.from.p == std::vector<int>{0, 0} && row.to.p == std::vector<int>{1, 1}) {
      found = true;
      CHECK(row.classical);
      CHECK(row.cond1);
      CHECK(row.cond2);
    }
  }
  CHECK(found);

  GrassmannSweep chain = verify_equivalence(1, 3);
  CHECK(chain.equivalent);
  CHECK(chain.rows.size() == 16);

  CHECK(verify_equivalence(2, 4).equivalent);
  CHECK(verify_equivalence(3, 4).equivalent);
}

TEST_CASE("the pair budget caps the sweep") {
  CHECK_THROWS_AS(verify_equivalence(3, 5, 10), BudgetError);
  CHECK_NOTHROW(verify_equivalence(2, 2, 9));
}
