#include "stairs/arrows.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "stairs/errors.hpp"
#include "stairs/parse.hpp"
#include "stairs/profile.hpp"

namespace stairs {

namespace {

Monomial box_flip(const Box& box, Monomial m) {
  return Monomial{box.m - 1 - m.alpha, box.n - 1 - m.beta};
}

bool in_box(const Box& box, Monomial m) {
  return m.alpha >= 0 && m.beta >= 0 && m.alpha < box.m && m.beta < box.n;
}

Violation make_violation(ViolationKind kind, Monomial at, std::string msg) {
  return Violation{kind, at, std::move(msg)};
}

}  // namespace

Monomial arrow_end(const Grading& g, const Arrow& f) {
  return Monomial{f.origin.alpha + static_cast<int>(f.lambda) * g.a(),
                  f.origin.beta + static_cast<int>(f.lambda) * g.b()};
}

ArrowSystem::ArrowSystem(Grading g, Staircase base, std::vector<long long> lambdas)
    : grading_(g), base_(std::move(base)), lambdas_(std::move(lambdas)) {
  if (lambdas_.size() != base_.size()) {
    throw std::invalid_argument("one multiplier per staircase cell required");
  }
}

bool ArrowSystem::is_identity() const {
  return std::all_of(lambdas_.begin(), lambdas_.end(),
                     [](long long l) { return l == 0; });
}

std::vector<Violation> validate_system(const ArrowSystem& s) {
  std::vector<Violation> out;
  const Grading& g = s.grading();
  std::map<Monomial, long long> end_abs;  // end -> |lambda| of the arrow ending there
  bool ends_usable = true;
  for (size_t i = 0; i < s.base().size(); ++i) {
    Arrow f = s.arrow(i);
    if (f.lambda > 0) {
      out.push_back(make_violation(ViolationKind::LambdaSign, f.origin,
                                   "arrow multiplier must be nonpositive at " +
                                       to_text(f.origin)));
      ends_usable = false;
      continue;
    }
    Monomial q = arrow_end(g, f);
    if (q.alpha < 0 || q.beta < 0) {
      out.push_back(make_violation(ViolationKind::EndNegative, f.origin,
                                   "arrow end has a negative exponent at " +
                                       to_text(f.origin)));
      ends_usable = false;
      continue;
    }
    auto [it, inserted] = end_abs.emplace(q, -f.lambda);
    if (!inserted) {
      out.push_back(make_violation(ViolationKind::DuplicateEnd, q,
                                   "two arrows end at " + to_text(q)));
      ends_usable = false;
    }
  }
  if (!ends_usable) return out;
  for (const auto& [q, abs_lambda] : end_abs) {
    if (q.alpha > 0) {
      auto it = end_abs.find(Monomial{q.alpha - 1, q.beta});
      if (it == end_abs.end() || it->second > abs_lambda) {
        out.push_back(make_violation(ViolationKind::DivisionX, q,
                                     "division by x fails at end " + to_text(q)));
      }
    }
    if (q.beta > 0) {
      auto it = end_abs.find(Monomial{q.alpha, q.beta - 1});
      if (it == end_abs.end() || it->second > abs_lambda) {
        out.push_back(make_violation(ViolationKind::DivisionY, q,
                                     "division by y fails at end " + to_text(q)));
      }
    }
  }
  return out;
}

Staircase apply_system(const ArrowSystem& s) {
  std::vector<Violation> violations = validate_system(s);
  if (!violations.empty()) {
    throw ValidationError("invalid arrow system: " + violations.front().message);
  }
  std::vector<Monomial> ends;
  ends.reserve(s.base().size());
  for (size_t i = 0; i < s.base().size(); ++i) {
    ends.push_back(arrow_end(s.grading(), s.arrow(i)));
  }
  return Staircase{std::move(ends)};
}

namespace {

// Backtracking search for a multiplier assignment mu : f -> N such that
// q + mu(q)*(a,b) is a bijection onto e and mu never decreases from a
// quotient q/x or q/y to q.  Ends are processed in increasing monomial
// order so quotients are assigned first; smaller mu is tried first.
class SystemSearch {
 public:
  SystemSearch(const Grading& g, const Staircase& e, const Staircase& f)
      : g_(g), e_(e) {
    ends_ = f.cells();
    std::sort(ends_.begin(), ends_.end(),
              [&](Monomial m1, Monomial m2) { return g.less(m1, m2); });
    n_ = ends_.size();
    std::map<Monomial, int> end_index;
    for (size_t i = 0; i < n_; ++i) end_index[ends_[i]] = static_cast<int>(i);
    div_x_.assign(n_, -1);
    div_y_.assign(n_, -1);
    for (size_t i = 0; i < n_; ++i) {
      if (ends_[i].alpha > 0) {
        div_x_[i] = end_index.at(Monomial{ends_[i].alpha - 1, ends_[i].beta});
      }
      if (ends_[i].beta > 0) {
        div_y_[i] = end_index.at(Monomial{ends_[i].alpha, ends_[i].beta - 1});
      }
    }
    for (size_t i = 0; i < e_.size(); ++i) {
      origin_index_[e_.cells()[i]] = static_cast<int>(i);
      max_alpha_ = std::max(max_alpha_, e_.cells()[i].alpha);
    }
    mu_.assign(n_, -1);
    used_.assign(e_.size(), false);
    assigned_origin_.assign(n_, -1);
  }

  std::optional<std::vector<long long>> run() {
    if (!feasible(0)) return std::nullopt;
    if (dfs(0)) {
      // reindex multipliers by origin cell for the ArrowSystem layout
      std::vector<long long> lambdas(e_.size(), 0);
      for (size_t i = 0; i < n_; ++i) {
        lambdas[static_cast<size_t>(assigned_origin_[i])] = -mu_[i];
      }
      return lambdas;
    }
    return std::nullopt;
  }

 private:
  int origin_of(Monomial q, long long mu) const {
    Monomial o{q.alpha + static_cast<int>(mu) * g_.a(),
               q.beta + static_cast<int>(mu) * g_.b()};
    if (o.beta < 0 || o.alpha > max_alpha_) return -2;  // out of range for all larger mu
    auto it = origin_index_.find(o);
    return it == origin_index_.end() ? -1 : it->second;
  }

  long long lower_bound(size_t i) const {
    long long lb = 0;
    if (div_x_[i] >= 0) lb = std::max(lb, mu_[static_cast<size_t>(div_x_[i])]);
    if (div_y_[i] >= 0) lb = std::max(lb, mu_[static_cast<size_t>(div_y_[i])]);
    return lb;
  }

  // Hall-style relaxation: every still-unassigned end must be matchable to a
  // distinct unused origin respecting transitively propagated lower bounds.
  // Future monotonicity constraints are ignored, so failure here is final
  // but success is not a guarantee.
  bool feasible(size_t next) {
    std::vector<long long> lb_star(n_, 0);
    for (size_t j = 0; j < n_; ++j) {
      if (j < next) {
        lb_star[j] = mu_[j];
        continue;
      }
      long long lb = 0;
      if (div_x_[j] >= 0) lb = std::max(lb, lb_star[static_cast<size_t>(div_x_[j])]);
      if (div_y_[j] >= 0) lb = std::max(lb, lb_star[static_cast<size_t>(div_y_[j])]);
      lb_star[j] = lb;
    }
    std::vector<std::vector<int>> adj(n_);
    for (size_t j = next; j < n_; ++j) {
      for (long long mu = lb_star[j];; ++mu) {
        int o = origin_of(ends_[j], mu);
        if (o == -2) break;
        if (o >= 0 && !used_[static_cast<size_t>(o)]) adj[j].push_back(o);
      }
      if (adj[j].empty()) return false;
    }
    std::vector<int> matched_origin(e_.size(), -1);
    std::vector<char> visited(e_.size(), 0);
    auto augment = [&](auto&& self, size_t j) -> bool {
      for (int o : adj[j]) {
        if (visited[static_cast<size_t>(o)]) continue;
        visited[static_cast<size_t>(o)] = 1;
        if (matched_origin[static_cast<size_t>(o)] < 0 ||
            self(self, static_cast<size_t>(matched_origin[static_cast<size_t>(o)]))) {
          matched_origin[static_cast<size_t>(o)] = static_cast<int>(j);
          return true;
        }
      }
      return false;
    };
    for (size_t j = next; j < n_; ++j) {
      std::fill(visited.begin(), visited.end(), 0);
      if (!augment(augment, j)) return false;
    }
    return true;
  }

  bool dfs(size_t i) {
    if (i == n_) return true;
    long long lb = lower_bound(i);
    std::vector<std::pair<long long, int>> candidates;
    for (long long mu = lb;; ++mu) {
      int o = origin_of(ends_[i], mu);
      if (o == -2) break;
      if (o >= 0 && !used_[static_cast<size_t>(o)]) candidates.emplace_back(mu, o);
    }
    bool branching = candidates.size() > 1;
    for (auto [mu, o] : candidates) {
      mu_[i] = mu;
      assigned_origin_[i] = o;
      used_[static_cast<size_t>(o)] = true;
      if (!branching || feasible(i + 1)) {
        if (dfs(i + 1)) return true;
      }
      used_[static_cast<size_t>(o)] = false;
      assigned_origin_[i] = -1;
      mu_[i] = -1;
    }
    return false;
  }

  const Grading& g_;
  const Staircase& e_;
  std::vector<Monomial> ends_;
  size_t n_ = 0;
  std::vector<int> div_x_, div_y_;
  std::map<Monomial, int> origin_index_;
  int max_alpha_ = -1;
  std::vector<long long> mu_;
  std::vector<char> used_;
  std::vector<int> assigned_origin_;
};

}  // namespace

std::optional<ArrowSystem> find_system(const Grading& g, const Staircase& e,
                                       const Staircase& f) {
  if (e.size() != f.size()) return std::nullopt;
  if (e.empty()) return ArrowSystem{g, e, {}};
  SystemSearch search(g, e, f);
  std::optional<std::vector<long long>> lambdas = search.run();
  if (!lambdas) return std::nullopt;
  return ArrowSystem{g, e, std::move(*lambdas)};
}

CoArrowSystem::CoArrowSystem(Grading g, Box box, Staircase base,
                             std::vector<Arrow> listed)
    : grading_(g), box_(box), base_(std::move(base)), listed_(std::move(listed)) {
  if (!base_.fits(box_)) throw FitError("staircase does not fit the box");
  std::sort(listed_.begin(), listed_.end(),
            [](const Arrow& f1, const Arrow& f2) { return f1.origin < f2.origin; });
  for (size_t i = 0; i < listed_.size(); ++i) {
    const Arrow& f = listed_[i];
    if (i > 0 && listed_[i - 1].origin == f.origin) {
      throw std::invalid_argument("listed origins must be distinct");
    }
    if (f.lambda < 0) {
      throw std::invalid_argument("listed multipliers must be nonnegative");
    }
    if (!in_box(box_, f.origin)) {
      throw std::invalid_argument("listed origins must lie inside the box");
    }
    if (base_.contains(f.origin)) {
      throw std::invalid_argument("listed origins must lie in the complement");
    }
    if (arrow_end(grading_, f).beta < 0) {
      throw std::invalid_argument("arrow end has a negative exponent");
    }
  }
}

namespace {

struct CoEndTables {
  std::map<Monomial, long long> end_mu;     // listed end -> mu
  std::map<Monomial, long long> origin_mu;  // listed origin -> mu
};

CoEndTables co_end_tables(const CoArrowSystem& s) {
  CoEndTables t;
  for (const Arrow& f : s.listed()) {
    t.origin_mu[f.origin] = f.lambda;
    t.end_mu.emplace(arrow_end(s.grading(), f), f.lambda);
  }
  return t;
}

// Whether m is the end of some arrow (listed or implicit identity), and the
// multiplier of that arrow.
std::optional<long long> end_multiplier(const CoArrowSystem& s, const CoEndTables& t,
                                        Monomial m) {
  auto it = t.end_mu.find(m);
  if (it != t.end_mu.end()) return it->second;
  if (!s.base().contains(m) && !t.origin_mu.count(m)) return 0;  // identity at m
  return std::nullopt;
}

}  // namespace

std::vector<Violation> validate_cosystem(const CoArrowSystem& s) {
  std::vector<Violation> out;
  const Grading& g = s.grading();
  std::map<Monomial, long long> end_mu;
  std::map<Monomial, long long> origin_mu;
  for (const Arrow& f : s.listed()) origin_mu[f.origin] = f.lambda;
  bool ends_usable = true;
  for (const Arrow& f : s.listed()) {
    Monomial q = arrow_end(g, f);
    if (!in_box(s.box(), q)) {
      out.push_back(make_violation(
          ViolationKind::EndOutsideBox, q,
          "listed end " + to_text(q) +
              " lies outside the box and collides with an implicit identity"));
      ends_usable = false;
      continue;
    }
    auto [it, inserted] = end_mu.emplace(q, f.lambda);
    if (!inserted) {
      out.push_back(make_violation(ViolationKind::DuplicateEnd, q,
                                   "two arrows end at " + to_text(q)));
      ends_usable = false;
      continue;
    }
    if (!s.base().contains(q) && !origin_mu.count(q)) {
      out.push_back(make_violation(
          ViolationKind::DuplicateEnd, q,
          "listed end " + to_text(q) + " collides with an implicit identity"));
      ends_usable = false;
    }
  }
  if (!ends_usable) return out;
  CoEndTables tables{end_mu, origin_mu};
  std::vector<Monomial> cells;
  for (int alpha = 0; alpha < s.box().m; ++alpha) {
    for (int beta = 0; beta < s.box().n; ++beta) {
      Monomial m{alpha, beta};
      if (!end_multiplier(s, tables, m)) cells.push_back(m);
    }
  }
  if (!is_staircase(cells)) {
    out.push_back(make_violation(ViolationKind::ComplementNotStaircase, Monomial{},
                                 "the non-end monomials do not form a staircase"));
  }
  for (const auto& [q, mu] : end_mu) {
    if (mu == 0) continue;
    if (q.alpha > 0) {
      std::optional<long long> below = end_multiplier(s, tables, Monomial{q.alpha - 1, q.beta});
      if (below && mu > *below) {
        out.push_back(make_violation(ViolationKind::MultiplicationX, q,
                                     "multiplication by x fails at end " + to_text(q)));
      }
    }
    if (q.beta > 0) {
      std::optional<long long> below = end_multiplier(s, tables, Monomial{q.alpha, q.beta - 1});
      if (below && mu > *below) {
        out.push_back(make_violation(ViolationKind::MultiplicationY, q,
                                     "multiplication by y fails at end " + to_text(q)));
      }
    }
  }
  return out;
}

Staircase apply_cosystem(const CoArrowSystem& s) {
  std::vector<Violation> violations = validate_cosystem(s);
  if (!violations.empty()) {
    throw ValidationError("invalid co-arrow system: " + violations.front().message);
  }
  CoEndTables tables = co_end_tables(s);
  std::vector<Monomial> cells;
  for (int alpha = 0; alpha < s.box().m; ++alpha) {
    for (int beta = 0; beta < s.box().n; ++beta) {
      Monomial m{alpha, beta};
      if (!end_multiplier(s, tables, m)) cells.push_back(m);
    }
  }
  return Staircase{std::move(cells)};
}

CoArrowSystem psi_forward(const ArrowSystem& s, const Box& box) {
  const Grading& g = s.grading();
  for (size_t i = 0; i < s.base().size(); ++i) {
    Monomial q = arrow_end(g, s.arrow(i));
    if (!in_box(box, q)) {
      throw DomainError("arrow end " + to_text(q) + " lies outside the box");
    }
  }
  Staircase e = dual(s.base(), box);
  std::vector<Arrow> listed;
  for (size_t i = 0; i < s.base().size(); ++i) {
    Arrow f = s.arrow(i);
    if (f.lambda == 0) continue;
    listed.push_back(Arrow{box_flip(box, f.origin), -f.lambda});
  }
  return CoArrowSystem{g, box, std::move(e), std::move(listed)};
}

ArrowSystem psi_backward(const CoArrowSystem& s) {
  const Grading& g = s.grading();
  std::map<Monomial, long long> origin_mu;
  for (const Arrow& f : s.listed()) {
    Monomial q = arrow_end(g, f);
    if (!in_box(s.box(), q)) {
      throw DomainError("listed arrow end " + to_text(q) + " lies outside the box");
    }
    origin_mu[f.origin] = f.lambda;
  }
  Staircase ev = dual(s.base(), s.box());
  std::vector<long long> lambdas(ev.size(), 0);
  for (size_t i = 0; i < ev.size(); ++i) {
    auto it = origin_mu.find(box_flip(s.box(), ev.cells()[i]));
    if (it != origin_mu.end()) lambdas[i] = -it->second;
  }
  return ArrowSystem{g, std::move(ev), std::move(lambdas)};
}

NecessaryConditionReport necessary_condition(const Grading& g, const Staircase& e,
                                             const Staircase& f,
                                             std::optional<Box> box) {
  if (e.size() != f.size()) {
    throw std::invalid_argument("staircases must have the same number of cells");
  }
  int n = std::max<int>(1, static_cast<int>(e.size()));
  Box b = box.value_or(Box{n, n});
  if (!e.fits(b) || !f.fits(b)) {
    throw FitError("staircases do not fit the box");
  }
  NecessaryConditionReport report;
  report.box = b;
  report.yameogo = dominates(g, e, f);
  report.witness1 = find_system(g, e, f);
  report.cond1 = report.witness1.has_value();
  report.witness2 = find_system(g, dual(e, b), dual(f, b));
  report.cond2 = report.witness2.has_value();
  return report;
}

}  // namespace stairs
