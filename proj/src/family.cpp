#include "stairs/family.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <sstream>

#include "stairs/errors.hpp"
#include "stairs/parse.hpp"

namespace stairs {

namespace {

mpz_class lcm_z(const mpz_class& u, const mpz_class& v) {
  mpz_class out;
  mpz_lcm(out.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
  return out;
}

mpz_class gcd_z(const mpz_class& u, const mpz_class& v) {
  mpz_class out;
  mpz_gcd(out.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
  return out;
}

bool row_is_zero(const std::vector<TPoly>& row) {
  return std::all_of(row.begin(), row.end(),
                     [](const TPoly& e) { return e.is_zero(); });
}

// Divide a row by its polynomial and rational content and fix the sign so
// the leading coefficient of the first nonzero entry is positive.
void normalize_row(std::vector<TPoly>& row) {
  TPoly g;
  for (const TPoly& e : row) {
    if (!e.is_zero()) g = poly_gcd(g, e);
  }
  if (g.is_zero()) return;
  if (g.degree() > 0) {
    for (TPoly& e : row) {
      if (!e.is_zero()) e = exact_div(e, g);
    }
  }
  mpz_class num(0), den(1);
  for (const TPoly& e : row) {
    for (const Rat& c : e.coeffs()) {
      if (c == 0) continue;
      num = gcd_z(num, c.get_num());
      den = lcm_z(den, c.get_den());
    }
  }
  Rat content(num, den);
  content.canonicalize();
  for (TPoly& e : row) e = (Rat(1) / content) * e;
  for (const TPoly& e : row) {
    if (e.is_zero()) continue;
    if (e.leading() < 0) {
      for (TPoly& x : row) x = Rat(-1) * x;
    }
    break;
  }
}

// Full reduced echelon form over rational functions in t, entries kept
// polynomial by cross-multiplication; zero rows are dropped.
void rref(std::vector<std::vector<TPoly>>& rows, std::vector<int>& pivots) {
  pivots.clear();
  size_t ncols = rows.empty() ? 0 : rows[0].size();
  size_t r = 0;
  for (size_t col = 0; col < ncols && r < rows.size(); ++col) {
    size_t sel = rows.size();
    for (size_t i = r; i < rows.size(); ++i) {
      if (!rows[i][col].is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      TPoly a = rows[r][col];
      TPoly b = rows[i][col];
      for (size_t c = 0; c < ncols; ++c) {
        rows[i][c] = a * rows[i][c] - b * rows[r][c];
      }
      normalize_row(rows[i]);
    }
    normalize_row(rows[r]);
    pivots.push_back(static_cast<int>(col));
    ++r;
  }
  rows.resize(r);
}

// Reduce w against an echelon basis in place; w ends up zero iff it lies in
// the span over rational functions.
void reduce_against(std::vector<TPoly>& w, const std::vector<std::vector<TPoly>>& rows,
                    const std::vector<int>& pivots) {
  for (size_t r = 0; r < rows.size(); ++r) {
    size_t col = static_cast<size_t>(pivots[r]);
    if (w[col].is_zero()) continue;
    TPoly a = rows[r][col];
    TPoly b = w[col];
    for (size_t c = 0; c < w.size(); ++c) {
      w[c] = a * w[c] - b * rows[r][c];
    }
    normalize_row(w);
  }
}

std::vector<Monomial> slice_desc(const Grading& g, long long degree) {
  std::vector<Monomial> slice = g.degree_slice(degree);
  std::reverse(slice.begin(), slice.end());
  return slice;
}

int top_t_degree(const std::vector<TPoly>& row) {
  int d = -1;
  for (const TPoly& e : row) d = std::max(d, e.degree());
  return d;
}

// Index in the slice (descending, so the first hit is the largest monomial)
// of the monomial whose coefficient attains the top t-degree.
size_t val_index(const std::vector<TPoly>& row, int d_top) {
  for (size_t k = 0; k < row.size(); ++k) {
    if (row[k].degree() == d_top) return k;
  }
  throw std::logic_error("top t-degree not attained");
}

// Echelon over the rationals with unit pivots, reduced upward, dependency
// rows rejected by the caller.
void rref_rat(std::vector<std::vector<Rat>>& rows, std::vector<int>& pivots) {
  pivots.clear();
  size_t ncols = rows.empty() ? 0 : rows[0].size();
  size_t r = 0;
  for (size_t col = 0; col < ncols && r < rows.size(); ++col) {
    size_t sel = rows.size();
    for (size_t i = r; i < rows.size(); ++i) {
      if (rows[i][col] != 0) {
        sel = i;
        break;
      }
    }
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    Rat inv = Rat(1) / rows[r][col];
    for (Rat& x : rows[r]) x *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      Rat f = rows[i][col];
      for (size_t c = 0; c < ncols; ++c) rows[i][c] -= f * rows[r][c];
    }
    pivots.push_back(static_cast<int>(col));
    ++r;
  }
  rows.resize(r);
}

// Coefficients of a rational dependency among the rows, or nothing when the
// rows are independent.
std::optional<std::vector<Rat>> rational_dependency(
    const std::vector<std::vector<Rat>>& rows) {
  size_t m = rows.size();
  std::vector<std::vector<Rat>> basis;
  std::vector<std::vector<Rat>> combos;
  std::vector<size_t> basis_pivot;
  for (size_t i = 0; i < m; ++i) {
    std::vector<Rat> v = rows[i];
    std::vector<Rat> c(m, Rat(0));
    c[i] = 1;
    for (size_t r = 0; r < basis.size(); ++r) {
      size_t col = basis_pivot[r];
      if (v[col] == 0) continue;
      Rat f = v[col] / basis[r][col];
      for (size_t k = 0; k < v.size(); ++k) v[k] -= f * basis[r][k];
      for (size_t k = 0; k < m; ++k) c[k] -= f * combos[r][k];
    }
    size_t piv = v.size();
    for (size_t k = 0; k < v.size(); ++k) {
      if (v[k] != 0) {
        piv = k;
        break;
      }
    }
    if (piv == v.size()) return c;
    basis.push_back(std::move(v));
    combos.push_back(std::move(c));
    basis_pivot.push_back(piv);
  }
  return std::nullopt;
}

}  // namespace

GradedFamily::GradedFamily(Grading g, long long top,
                           std::map<long long, std::vector<FamilyGenerator>> degrees,
                           std::string name)
    : grading_(g), top_(top), degrees_(std::move(degrees)), name_(std::move(name)) {
  if (top_ < 0) throw DomainError("top degree must be nonnegative");
  for (const auto& [d, gens] : degrees_) {
    if (d < 0 || d > top_) {
      throw DomainError("family lists generators outside degrees 0.." +
                        std::to_string(top_));
    }
    for (const FamilyGenerator& gen : gens) {
      for (const FamilyTerm& term : gen) {
        if (term.m.alpha < 0 || term.m.beta < 0) {
          throw DomainError("family term has a negative exponent");
        }
        if (grading_.degree(term.m) != d) {
          throw DomainError("family term " + to_text(term.m) +
                            " is not of degree " + std::to_string(d));
        }
      }
    }
  }
}

PieceEchelon piece_echelon(const GradedFamily& f, long long degree) {
  PieceEchelon out;
  out.slice = slice_desc(f.grading(), degree);
  if (degree > f.top()) {
    // the family is full beyond its top degree
    for (size_t k = 0; k < out.slice.size(); ++k) {
      std::vector<TPoly> row(out.slice.size());
      row[k] = TPoly::constant(Rat(1));
      out.rows.push_back(std::move(row));
      out.pivots.push_back(static_cast<int>(k));
    }
    return out;
  }
  auto it = f.degrees().find(degree);
  if (it == f.degrees().end()) return out;
  std::map<Monomial, size_t> index;
  for (size_t k = 0; k < out.slice.size(); ++k) index[out.slice[k]] = k;
  for (const FamilyGenerator& gen : it->second) {
    std::vector<TPoly> row(out.slice.size());
    for (const FamilyTerm& term : gen) {
      row[index.at(term.m)] += term.c;
    }
    if (!row_is_zero(row)) out.rows.push_back(std::move(row));
  }
  rref(out.rows, out.pivots);
  return out;
}

namespace {

Staircase staircase_from_pieces(
    const Grading& g, long long top,
    const std::function<std::vector<int>(long long)>& pivots_of) {
  std::vector<Monomial> cells;
  for (long long d = 0; d <= top; ++d) {
    std::vector<Monomial> slice = slice_desc(g, d);
    std::vector<char> is_pivot(slice.size(), 0);
    for (int col : pivots_of(d)) is_pivot[static_cast<size_t>(col)] = 1;
    for (size_t k = 0; k < slice.size(); ++k) {
      if (!is_pivot[k]) cells.push_back(slice[k]);
    }
  }
  try {
    return Staircase{std::move(cells)};
  } catch (const std::invalid_argument&) {
    throw ValidationError("initial cells do not form a staircase");
  }
}

void check_closure_from_pieces(
    const GradedFamily& f,
    const std::function<std::vector<TPoly>(long long, size_t)>& row_of,
    const std::function<size_t(long long)>& nrows_of,
    const std::function<const std::vector<int>&(long long)>& pivots_of,
    const char* what) {
  const Grading& g = f.grading();
  std::array<std::pair<Monomial, long long>, 2> shifts = {
      std::make_pair(Monomial{1, 0}, static_cast<long long>(-g.b())),
      std::make_pair(Monomial{0, 1}, static_cast<long long>(g.a()))};
  for (long long d = 0; d <= f.top(); ++d) {
    size_t nrows = nrows_of(d);
    if (nrows == 0) continue;
    std::vector<Monomial> slice = slice_desc(g, d);
    for (const auto& [shift, ddeg] : shifts) {
      long long target = d + ddeg;
      if (target > f.top()) continue;
      std::vector<Monomial> tslice = slice_desc(g, target);
      std::map<Monomial, size_t> tindex;
      for (size_t k = 0; k < tslice.size(); ++k) tindex[tslice[k]] = k;
      std::vector<std::vector<TPoly>> trows;
      for (size_t r = 0; r < nrows_of(target); ++r) trows.push_back(row_of(target, r));
      const std::vector<int>& tpivots = pivots_of(target);
      for (size_t r = 0; r < nrows; ++r) {
        std::vector<TPoly> row = row_of(d, r);
        std::vector<TPoly> w(tslice.size());
        for (size_t k = 0; k < slice.size(); ++k) {
          if (row[k].is_zero()) continue;
          Monomial m{slice[k].alpha + shift.alpha, slice[k].beta + shift.beta};
          w[tindex.at(m)] += row[k];
        }
        reduce_against(w, trows, tpivots);
        if (!row_is_zero(w)) {
          throw ClosureError(std::string(what) + ": multiplying a degree-" +
                             std::to_string(d) +
                             " element leaves the degree-" +
                             std::to_string(target) + " piece");
        }
      }
    }
  }
}

}  // namespace

Staircase generic_initial_staircase(const GradedFamily& f) {
  return staircase_from_pieces(f.grading(), f.top(), [&](long long d) {
    return piece_echelon(f, d).pivots;
  });
}

void check_generic_closure(const GradedFamily& f) {
  std::map<long long, PieceEchelon> cache;
  auto piece = [&](long long d) -> const PieceEchelon& {
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, piece_echelon(f, d)).first;
    return it->second;
  };
  check_closure_from_pieces(
      f, [&](long long d, size_t r) { return piece(d).rows[r]; },
      [&](long long d) { return piece(d).rows.size(); },
      [&](long long d) -> const std::vector<int>& { return piece(d).pivots; },
      "family");
}

std::vector<std::vector<Rat>> limit_subspace(std::vector<std::vector<TPoly>> rows) {
  for (const std::vector<TPoly>& row : rows) {
    if (row_is_zero(row)) throw DependenceError("rows are dependent over rational functions");
  }
  while (true) {
    std::vector<std::vector<Rat>> tops;
    tops.reserve(rows.size());
    std::vector<int> degs;
    for (const std::vector<TPoly>& row : rows) {
      int d = top_t_degree(row);
      degs.push_back(d);
      std::vector<Rat> v;
      v.reserve(row.size());
      for (const TPoly& e : row) v.push_back(e.coeff(d));
      tops.push_back(std::move(v));
    }
    std::optional<std::vector<Rat>> dep = rational_dependency(tops);
    if (!dep) return tops;
    int k = -1;
    for (size_t i = 0; i < rows.size(); ++i) {
      if ((*dep)[i] == 0) continue;
      if (k < 0 || degs[i] > degs[static_cast<size_t>(k)]) k = static_cast<int>(i);
    }
    std::vector<TPoly> combined(rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
      if ((*dep)[i] == 0) continue;
      TPoly scale = TPoly::monomial((*dep)[i], degs[static_cast<size_t>(k)] - degs[i]);
      for (size_t c = 0; c < combined.size(); ++c) {
        combined[c] += scale * rows[static_cast<size_t>(i)][c];
      }
    }
    if (row_is_zero(combined)) {
      throw DependenceError("rows are dependent over rational functions");
    }
    normalize_row(combined);
    rows[static_cast<size_t>(k)] = std::move(combined);
  }
}

LimitPiece limit_piece(const GradedFamily& f, long long degree) {
  PieceEchelon ech = piece_echelon(f, degree);
  LimitPiece out;
  out.slice = std::move(ech.slice);
  if (ech.rows.empty()) return out;
  out.rows = limit_subspace(std::move(ech.rows));
  rref_rat(out.rows, out.pivots);
  return out;
}

Staircase limit_staircase(const GradedFamily& f) {
  return staircase_from_pieces(f.grading(), f.top(), [&](long long d) {
    return limit_piece(f, d).pivots;
  });
}

void check_limit_closure(const GradedFamily& f) {
  std::map<long long, LimitPiece> cache;
  auto piece = [&](long long d) -> const LimitPiece& {
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, limit_piece(f, d)).first;
    return it->second;
  };
  auto as_tpoly = [&](long long d, size_t r) {
    std::vector<TPoly> row;
    row.reserve(piece(d).rows[r].size());
    for (const Rat& c : piece(d).rows[r]) {
      row.push_back(c == 0 ? TPoly{} : TPoly::constant(c));
    }
    return row;
  };
  check_closure_from_pieces(
      f, as_tpoly, [&](long long d) { return piece(d).rows.size(); },
      [&](long long d) -> const std::vector<int>& { return piece(d).pivots; },
      "limit");
}

CoArrowSystem extract_cosystem(const GradedFamily& f, const Box& box) {
  const Grading& g = f.grading();
  Staircase generic = generic_initial_staircase(f);
  std::vector<Arrow> listed;
  for (long long d = 0; d <= f.top(); ++d) {
    PieceEchelon ech = piece_echelon(f, d);
    if (ech.rows.empty()) continue;
    // Lower (Δ, val) of each candidate, where val is the largest monomial
    // whose coefficient carries the top t-power and Δ the gap between that
    // power and the t-degree at the initial monomial.  A candidate may be
    // reduced by smaller-pivot candidates whenever that helps.
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < ech.rows.size() && !changed; ++i) {
        int di = top_t_degree(ech.rows[i]);
        size_t vi = val_index(ech.rows[i], di);
        int delta_i = di - ech.rows[i][static_cast<size_t>(ech.pivots[i])].degree();
        for (size_t j = 0; j < ech.rows.size() && !changed; ++j) {
          if (j == i || ech.pivots[j] <= ech.pivots[i]) continue;
          const TPoly& b = ech.rows[j][vi];
          if (b.is_zero() || di - b.degree() < 0) continue;
          TPoly scale = TPoly::monomial(ech.rows[i][vi].leading() / b.leading(),
                                        di - b.degree());
          std::vector<TPoly> trial = ech.rows[i];
          for (size_t c = 0; c < trial.size(); ++c) {
            trial[c] -= scale * ech.rows[j][c];
          }
          normalize_row(trial);
          int dt = top_t_degree(trial);
          size_t vt = val_index(trial, dt);
          int delta_t = dt - trial[static_cast<size_t>(ech.pivots[i])].degree();
          if (delta_t < delta_i || (delta_t == delta_i && vt > vi)) {
            ech.rows[i] = std::move(trial);
            changed = true;
          }
        }
      }
    }
    std::vector<char> seen(ech.slice.size(), 0);
    for (size_t i = 0; i < ech.rows.size(); ++i) {
      size_t vi = val_index(ech.rows[i], top_t_degree(ech.rows[i]));
      if (seen[vi]) {
        throw ValidationError("reduction did not reach canonical representatives");
      }
      seen[vi] = 1;
      Monomial m = ech.slice[static_cast<size_t>(ech.pivots[i])];
      Monomial v = ech.slice[vi];
      if (v == m) continue;
      int dalpha = v.alpha - m.alpha;
      if (dalpha % g.a() != 0) {
        throw ValidationError("reduction did not reach canonical representatives");
      }
      long long mu = dalpha / g.a();
      if (mu < 0 || v.beta - m.beta != mu * g.b()) {
        throw ValidationError("reduction did not reach canonical representatives");
      }
      listed.push_back(Arrow{m, mu});
    }
  }
  CoArrowSystem out{g, box, std::move(generic), std::move(listed)};
  std::vector<Violation> violations = validate_cosystem(out);
  if (!violations.empty()) {
    throw ValidationError("extracted co-arrow system is invalid: " +
                          violations.front().message);
  }
  if (!(apply_cosystem(out) == limit_staircase(f))) {
    throw ValidationError("extracted ends do not match the limit staircase");
  }
  return out;
}

LimitReport verify_witness(const GradedFamily& f, const Staircase& from,
                           const Staircase& to, std::optional<Box> box) {
  LimitReport report;
  report.generic = generic_initial_staircase(f);
  int side = std::max<int>(1, static_cast<int>(report.generic.size()));
  Box b = box.value_or(Box{side, side});
  try {
    check_generic_closure(f);
    check_limit_closure(f);
    report.closure_ok = true;
  } catch (const ClosureError&) {
    report.closure_ok = false;
  }
  report.limit = limit_staircase(f);
  for (long long d = 0; d <= f.top(); ++d) {
    size_t generic_rank = piece_echelon(f, d).rows.size();
    size_t limit_rank = limit_piece(f, d).rows.size();
    if (generic_rank != limit_rank) {
      throw ValidationError("limit rank differs from the generic rank in degree " +
                            std::to_string(d));
    }
    report.per_degree_ranks.push_back(static_cast<long long>(generic_rank));
  }
  report.generic_matches = report.generic == from;
  report.limit_matches = report.limit == to;
  if (report.closure_ok) {
    report.extracted = extract_cosystem(f, b);
    report.cosystem_ok = apply_cosystem(*report.extracted) == report.limit;
  }
  return report;
}

namespace {

Rat rat_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) {
    return Rat(static_cast<long>(j.get<long long>()));
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    try {
      Rat r(s, 10);
      if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
      r.canonicalize();
      return r;
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed rational \"" + s + "\"");
    }
  }
  throw ParseError("coefficients must be integers or \"p/q\" strings");
}

nlohmann::json rat_to_json(const Rat& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) {
    return nlohmann::json(r.get_num().get_si());
  }
  return nlohmann::json(r.get_str());
}

}  // namespace

GradedFamily family_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("grading") || !j.contains("top") ||
      !j.contains("degrees")) {
    throw ParseError("family requires \"grading\", \"top\" and \"degrees\"");
  }
  Grading g = grading_from_json(j.at("grading"));
  if (!j.at("top").is_number_integer()) throw ParseError("\"top\" must be an integer");
  long long top = j.at("top").get<long long>();
  std::map<long long, std::vector<FamilyGenerator>> degrees;
  if (!j.at("degrees").is_object()) throw ParseError("\"degrees\" must be an object");
  for (const auto& [key, gens] : j.at("degrees").items()) {
    long long d = 0;
    try {
      size_t used = 0;
      d = std::stoll(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ParseError("malformed degree key \"" + key + "\"");
    }
    if (!gens.is_array()) throw ParseError("generators must be an array");
    std::vector<FamilyGenerator> list;
    for (const auto& gen : gens) {
      if (!gen.is_array()) throw ParseError("a generator must be an array of terms");
      FamilyGenerator terms;
      for (const auto& term : gen) {
        if (!term.is_object() || !term.contains("m") || !term.contains("c")) {
          throw ParseError("a term requires \"m\" and \"c\"");
        }
        const auto& m = term.at("m");
        if (!m.is_array() || m.size() != 2 || !m[0].is_number_integer() ||
            !m[1].is_number_integer()) {
          throw ParseError("\"m\" must be an exponent pair");
        }
        const auto& c = term.at("c");
        if (!c.is_array()) throw ParseError("\"c\" must be a coefficient list");
        std::vector<Rat> coeffs;
        for (const auto& entry : c) coeffs.push_back(rat_from_json(entry));
        terms.push_back(FamilyTerm{Monomial{m[0].get<int>(), m[1].get<int>()},
                                   TPoly{std::move(coeffs)}});
      }
      list.push_back(std::move(terms));
    }
    degrees[d] = std::move(list);
  }
  std::string name = j.value("name", std::string{});
  try {
    return GradedFamily{g, top, std::move(degrees), std::move(name)};
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

nlohmann::json to_json(const GradedFamily& f) {
  nlohmann::json j;
  if (!f.name().empty()) j["name"] = f.name();
  j["grading"] = to_json(f.grading());
  j["top"] = f.top();
  nlohmann::json degrees = nlohmann::json::object();
  for (const auto& [d, gens] : f.degrees()) {
    nlohmann::json list = nlohmann::json::array();
    for (const FamilyGenerator& gen : gens) {
      nlohmann::json terms = nlohmann::json::array();
      for (const FamilyTerm& term : gen) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const Rat& c : term.c.coeffs()) coeffs.push_back(rat_to_json(c));
        terms.push_back(nlohmann::json{{"m", {term.m.alpha, term.m.beta}},
                                       {"c", std::move(coeffs)}});
      }
      list.push_back(std::move(terms));
    }
    degrees[std::to_string(d)] = std::move(list);
  }
  j["degrees"] = std::move(degrees);
  return j;
}

GradedFamily family_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read family file " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed family file " + path + ": " + e.what());
  }
  return family_from_json(j);
}

}  // namespace stairs
