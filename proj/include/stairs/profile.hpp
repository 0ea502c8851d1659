#pragma once

#include <vector>

#include "stairs/staircase.hpp"

namespace stairs {

/// The counting profile of a staircase: values[k] is the number of cells
/// among the first k+1 monomials m_0 <= m_1 <= ... of the graded order.
/// Values are stored up to the rank of the largest cell; past that point the
/// profile is constantly |E|, which at() extends.  The profile determines
/// the staircase (consecutive differences are membership bits).
struct YameogoProfile {
  std::vector<long long> values;
  long long total = 0;

  long long at(size_t k) const { return k < values.size() ? values[k] : total; }

  friend bool operator==(const YameogoProfile&, const YameogoProfile&) = default;
};

YameogoProfile profile(const Grading& g, const Staircase& e);

/// Pointwise comparison profile(e) >= profile(f).  Requires |e| = |f|.
bool dominates(const Grading& g, const Staircase& e, const Staircase& f);

struct ExtremalStaircases {
  std::vector<Staircase> maxima;
  std::vector<Staircase> minima;
};

/// Dominance-maximal and -minimal staircases among all staircases with the
/// given Hilbert function.
ExtremalStaircases extremal_staircases(const Grading& g, const HilbertFunction& hf);

}  // namespace stairs
