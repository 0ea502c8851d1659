#include "stairs/profile.hpp"

#include <algorithm>
#include <stdexcept>

namespace stairs {

YameogoProfile profile(const Grading& g, const Staircase& e) {
  YameogoProfile p;
  p.total = static_cast<long long>(e.size());
  if (e.empty()) return p;
  Monomial top = e.cells().front();
  for (const Monomial& c : e.cells()) {
    if (g.less(top, c)) top = c;
  }
  long long horizon = g.rank(top);
  p.values.reserve(static_cast<size_t>(horizon + 1));
  long long seen = 0;
  long long k = 0;
  for (long long d = 0; k <= horizon; ++d) {
    for (const Monomial& m : g.degree_slice(d)) {
      if (k > horizon) break;
      if (e.contains(m)) ++seen;
      p.values.push_back(seen);
      ++k;
    }
  }
  return p;
}

bool dominates(const Grading& g, const Staircase& e, const Staircase& f) {
  if (e.size() != f.size()) {
    throw std::invalid_argument("dominance requires staircases of equal size");
  }
  YameogoProfile pe = profile(g, e);
  YameogoProfile pf = profile(g, f);
  size_t horizon = std::max(pe.values.size(), pf.values.size());
  for (size_t k = 0; k < horizon; ++k) {
    if (pe.at(k) < pf.at(k)) return false;
  }
  return true;
}

ExtremalStaircases extremal_staircases(const Grading& g, const HilbertFunction& hf) {
  std::vector<Staircase> all = enumerate_staircases(g, hf);
  ExtremalStaircases out;
  for (size_t i = 0; i < all.size(); ++i) {
    bool is_max = true;
    bool is_min = true;
    for (size_t j = 0; j < all.size() && (is_max || is_min); ++j) {
      if (i == j) continue;
      if (dominates(g, all[j], all[i])) is_max = false;
      if (dominates(g, all[i], all[j])) is_min = false;
    }
    if (is_max) out.maxima.push_back(all[i]);
    if (is_min) out.minima.push_back(all[i]);
  }
  return out;
}

}  // namespace stairs
