#include "stairs/grassmannian.hpp"

#include <algorithm>

#include "stairs/arrows.hpp"
#include "stairs/errors.hpp"

namespace stairs {

void check_grassmann_range(int n, int k) {
  if (k < 1 || n < 1 || n > k + 1) {
    throw DomainError("require k >= 1 and 1 <= n <= k+1, got n=" +
                      std::to_string(n) + ", k=" + std::to_string(k));
  }
}

HilbertFunction grassmannian_hilbert_function(int n, int k) {
  check_grassmann_range(n, k);
  std::vector<long long> values;
  for (int d = 1; d <= k; ++d) values.push_back(d);
  values.push_back(k + 1 - n);
  return HilbertFunction{std::move(values)};
}

namespace {

void check_index(const SchubertIndex& idx) {
  check_grassmann_range(idx.n, idx.k);
  if (static_cast<int>(idx.p.size()) != idx.n) {
    throw DomainError("partition must have exactly n parts");
  }
  for (int i = 0; i < idx.n; ++i) {
    if (idx.p[static_cast<size_t>(i)] < 0 ||
        (i > 0 && idx.p[static_cast<size_t>(i)] > idx.p[static_cast<size_t>(i - 1)])) {
      throw DomainError("partition parts must be non-increasing and nonnegative");
    }
  }
  if (idx.p[0] > idx.k + 1 - idx.n) {
    throw DomainError("largest part exceeds k+1-n");
  }
}

void enumerate_parts(int n, int k, int pos, int bound, std::vector<int>& parts,
                     std::vector<SchubertIndex>& out) {
  if (pos == n) {
    out.push_back(SchubertIndex{n, k, parts});
    return;
  }
  for (int v = bound; v >= 0; --v) {
    parts[static_cast<size_t>(pos)] = v;
    enumerate_parts(n, k, pos + 1, v, parts, out);
  }
}

}  // namespace

std::vector<SchubertIndex> all_indices(int n, int k) {
  check_grassmann_range(n, k);
  std::vector<SchubertIndex> out;
  std::vector<int> parts(static_cast<size_t>(n), 0);
  enumerate_parts(n, k, 0, k + 1 - n, parts, out);
  return out;
}

Staircase schubert_staircase(const SchubertIndex& idx) {
  check_index(idx);
  std::vector<Monomial> cells;
  for (int d = 0; d < idx.k; ++d) {
    for (int beta = 0; beta <= d; ++beta) cells.push_back(Monomial{d - beta, beta});
  }
  std::vector<Monomial> excluded;
  for (int i = 1; i <= idx.n; ++i) {
    int alpha = idx.n - i + idx.p[static_cast<size_t>(i - 1)];
    excluded.push_back(Monomial{alpha, idx.k - alpha});
  }
  for (int beta = 0; beta <= idx.k; ++beta) {
    Monomial m{idx.k - beta, beta};
    if (std::find(excluded.begin(), excluded.end(), m) == excluded.end()) {
      cells.push_back(m);
    }
  }
  return Staircase{std::move(cells)};
}

bool classical_leq(const SchubertIndex& p, const SchubertIndex& q) {
  check_index(p);
  check_index(q);
  if (p.n != q.n || p.k != q.k) throw DomainError("indices have different shapes");
  for (int i = 0; i < p.n; ++i) {
    if (q.p[static_cast<size_t>(i)] < p.p[static_cast<size_t>(i)]) return false;
  }
  return true;
}

GrassmannSweep verify_equivalence(int n, int k, long long pair_budget) {
  std::vector<SchubertIndex> indices = all_indices(n, k);
  long long pairs = static_cast<long long>(indices.size()) *
                    static_cast<long long>(indices.size());
  if (pairs > pair_budget) {
    throw BudgetError("sweep needs " + std::to_string(pairs) +
                      " pairs, budget is " + std::to_string(pair_budget));
  }
  Grading g{1, -1};
  std::vector<Staircase> staircases;
  staircases.reserve(indices.size());
  for (const SchubertIndex& idx : indices) {
    staircases.push_back(schubert_staircase(idx));
  }
  GrassmannSweep sweep;
  sweep.n = n;
  sweep.k = k;
  for (size_t i = 0; i < indices.size(); ++i) {
    for (size_t j = 0; j < indices.size(); ++j) {
      GrassmannRow row;
      row.from = indices[i];
      row.to = indices[j];
      row.classical = classical_leq(indices[i], indices[j]);
      NecessaryConditionReport report =
          necessary_condition(g, staircases[i], staircases[j]);
      row.cond1 = report.cond1;
      row.cond2 = report.cond2;
      if (!row.agree() && !sweep.first_mismatch) {
        sweep.equivalent = false;
        sweep.first_mismatch = row;
      }
      sweep.rows.push_back(std::move(row));
    }
  }
  return sweep;
}

}  // namespace stairs
