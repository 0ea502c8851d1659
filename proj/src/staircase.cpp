#include "stairs/staircase.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "stairs/errors.hpp"

namespace stairs {

namespace {

bool closed_under_division(const std::vector<Monomial>& sorted_cells) {
  std::set<Monomial> cells(sorted_cells.begin(), sorted_cells.end());
  for (const Monomial& c : sorted_cells) {
    if (c.alpha < 0 || c.beta < 0) return false;
    if (c.alpha > 0 && !cells.count(Monomial{c.alpha - 1, c.beta})) {
      return false;
    }
    if (c.beta > 0 && !cells.count(Monomial{c.alpha, c.beta - 1})) {
      return false;
    }
  }
  return true;
}

}  // namespace

HilbertFunction::HilbertFunction(std::vector<long long> values) : h_(std::move(values)) {
  for (long long v : h_) {
    if (v < 0) throw std::invalid_argument("Hilbert function entries must be nonnegative");
  }
  while (!h_.empty() && h_.back() == 0) h_.pop_back();
}

long long HilbertFunction::total() const {
  long long t = 0;
  for (long long v : h_) t += v;
  return t;
}

Staircase::Staircase(std::vector<Monomial> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end()) {
    throw std::invalid_argument("staircase cells must be distinct");
  }
  if (!closed_under_division(cells_)) {
    throw std::invalid_argument("cells are not closed under division");
  }
}

bool Staircase::contains(Monomial m) const {
  return std::binary_search(cells_.begin(), cells_.end(), m);
}

bool Staircase::fits(const Box& box) const {
  for (const Monomial& c : cells_) {
    if (c.alpha >= box.m || c.beta >= box.n) return false;
  }
  return true;
}

bool is_staircase(std::vector<Monomial> cells) {
  std::sort(cells.begin(), cells.end());
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end()) return false;
  return closed_under_division(cells);
}

std::vector<Monomial> minimal_generators(const Staircase& e) {
  int max_alpha = -1;
  int max_beta = -1;
  for (const Monomial& c : e.cells()) {
    max_alpha = std::max(max_alpha, c.alpha);
    max_beta = std::max(max_beta, c.beta);
  }
  std::vector<Monomial> gens;
  for (int alpha = 0; alpha <= max_alpha + 1; ++alpha) {
    for (int beta = 0; beta <= max_beta + 1; ++beta) {
      Monomial m{alpha, beta};
      if (e.contains(m)) continue;
      bool x_ok = alpha == 0 || e.contains(Monomial{alpha - 1, beta});
      bool y_ok = beta == 0 || e.contains(Monomial{alpha, beta - 1});
      if (x_ok && y_ok) gens.push_back(m);
    }
  }
  std::sort(gens.begin(), gens.end());
  return gens;
}

Staircase staircase_from_generators(const std::vector<Monomial>& gens) {
  for (const Monomial& m : gens) {
    if (m.alpha < 0 || m.beta < 0) {
      throw std::invalid_argument("generator exponents must be nonnegative");
    }
    if (m.alpha == 0 && m.beta == 0) return Staircase{};
  }
  int pure_x = -1;
  int pure_y = -1;
  for (const Monomial& m : gens) {
    if (m.beta == 0) pure_x = pure_x < 0 ? m.alpha : std::min(pure_x, m.alpha);
    if (m.alpha == 0) pure_y = pure_y < 0 ? m.beta : std::min(pure_y, m.beta);
  }
  if (pure_x < 0 || pure_y < 0) {
    throw ValidationError(
        "ideal has infinite colength: generators must include a pure power "
        "of x and a pure power of y");
  }
  std::vector<Monomial> cells;
  for (int alpha = 0; alpha < pure_x; ++alpha) {
    for (int beta = 0; beta < pure_y; ++beta) {
      bool divisible = false;
      for (const Monomial& m : gens) {
        if (alpha >= m.alpha && beta >= m.beta) {
          divisible = true;
          break;
        }
      }
      if (!divisible) cells.push_back(Monomial{alpha, beta});
    }
  }
  return Staircase{std::move(cells)};
}

HilbertFunction hilbert_function(const Grading& g, const Staircase& e) {
  long long max_deg = -1;
  for (const Monomial& c : e.cells()) max_deg = std::max(max_deg, g.degree(c));
  std::vector<long long> h(static_cast<size_t>(max_deg + 1), 0);
  for (const Monomial& c : e.cells()) ++h[static_cast<size_t>(g.degree(c))];
  return HilbertFunction{std::move(h)};
}

namespace {

void enumerate_rec(const Grading& g, const HilbertFunction& hf, size_t d,
                   std::set<Monomial>& chosen, std::vector<Staircase>& out) {
  if (d == hf.length()) {
    out.emplace_back(std::vector<Monomial>(chosen.begin(), chosen.end()));
    return;
  }
  std::vector<Monomial> candidates;
  for (const Monomial& m : g.degree_slice(static_cast<long long>(d))) {
    bool x_ok = m.alpha == 0 || chosen.count(Monomial{m.alpha - 1, m.beta});
    bool y_ok = m.beta == 0 || chosen.count(Monomial{m.alpha, m.beta - 1});
    if (x_ok && y_ok) candidates.push_back(m);
  }
  size_t want = static_cast<size_t>(hf.at(d));
  if (want > candidates.size()) return;
  std::vector<size_t> pick(want);
  auto choose = [&](auto&& self, size_t from, size_t slot) -> void {
    if (slot == want) {
      for (size_t i : pick) chosen.insert(candidates[i]);
      enumerate_rec(g, hf, d + 1, chosen, out);
      for (size_t i : pick) chosen.erase(candidates[i]);
      return;
    }
    for (size_t i = from; i + (want - slot) <= candidates.size(); ++i) {
      pick[slot] = i;
      self(self, i + 1, slot + 1);
    }
  };
  choose(choose, 0, 0);
}

}  // namespace

std::vector<Staircase> enumerate_staircases(const Grading& g,
                                            const HilbertFunction& hf) {
  std::vector<Staircase> out;
  std::set<Monomial> chosen;
  enumerate_rec(g, hf, 0, chosen, out);
  std::sort(out.begin(), out.end());
  return out;
}

Staircase dual(const Staircase& e, const Box& box) {
  if (!e.fits(box)) throw FitError("staircase does not fit the box");
  std::vector<Monomial> cells;
  for (int alpha = 0; alpha < box.m; ++alpha) {
    for (int beta = 0; beta < box.n; ++beta) {
      Monomial flipped{box.m - 1 - alpha, box.n - 1 - beta};
      if (!e.contains(flipped)) cells.push_back(Monomial{alpha, beta});
    }
  }
  return Staircase{std::move(cells)};
}

std::vector<Monomial> monomial_colon(const Staircase& e, const Box& box) {
  if (!e.fits(box)) throw FitError("staircase does not fit the box");
  std::vector<Monomial> gens = minimal_generators(e);
  auto member = [&](int alpha, int beta) {
    if (alpha < 0 || beta < 0) return false;
    for (const Monomial& m : gens) {
      if (alpha + m.alpha < box.m && beta + m.beta < box.n) return false;
    }
    return true;
  };
  std::vector<Monomial> out;
  for (int alpha = 0; alpha <= box.m; ++alpha) {
    for (int beta = 0; beta <= box.n; ++beta) {
      if (!member(alpha, beta)) continue;
      if (member(alpha - 1, beta) || member(alpha, beta - 1)) continue;
      out.push_back(Monomial{alpha, beta});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace stairs
