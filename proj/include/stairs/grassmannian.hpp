#pragma once

#include <optional>
#include <vector>

#include "stairs/monomial.hpp"
#include "stairs/staircase.hpp"

namespace stairs {

// Index of a Schubert cell on the Grassmannian of n-planes in (k+1)-space:
// a partition p_1 >= ... >= p_n >= 0 with p_1 <= k+1-n.
struct SchubertIndex {
  int n = 1;
  int k = 1;
  std::vector<int> p;
  bool operator==(const SchubertIndex&) const = default;
};

// Throws DomainError unless k >= 1 and 1 <= n <= k+1.
void check_grassmann_range(int n, int k);

// (1, 2, ..., k, k+1-n); the trailing entry drops out when n = k+1.
HilbertFunction grassmannian_hilbert_function(int n, int k);

// All valid indices for (n, k), in lexicographically decreasing order of p.
std::vector<SchubertIndex> all_indices(int n, int k);

// All monomials of degree below k together with the degree-k monomials other
// than x^(n-i+p_i) y^(k-n+i-p_i) for i = 1..n, under the grading (1,-1).
Staircase schubert_staircase(const SchubertIndex& idx);

// Classical incidence order on Schubert cells: q_i >= p_i for every i.
bool classical_leq(const SchubertIndex& p, const SchubertIndex& q);

struct GrassmannRow {
  SchubertIndex from;
  SchubertIndex to;
  bool classical = false;
  bool cond1 = false;
  bool cond2 = false;
  bool agree() const { return classical == cond1 && classical == cond2; }
};

struct GrassmannSweep {
  int n = 0;
  int k = 0;
  std::vector<GrassmannRow> rows;
  bool equivalent = true;
  std::optional<GrassmannRow> first_mismatch;
};

// Exhaustively compares the classical order with both staircase conditions
// over all ordered index pairs.  Throws DomainError on a bad range and
// BudgetError when the pair count exceeds the budget.
GrassmannSweep verify_equivalence(int n, int k, long long pair_budget = 200000);

}  // namespace stairs
