#include "stairs/tpoly.hpp"

#include <algorithm>
#include <utility>

#include "stairs/errors.hpp"

namespace stairs {

TPoly::TPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

TPoly TPoly::constant(const Rat& c) { return TPoly{{c}}; }

TPoly TPoly::monomial(const Rat& c, int degree) {
  if (degree < 0) throw DomainError("monomial degree must be nonnegative");
  std::vector<Rat> coeffs(static_cast<size_t>(degree) + 1, Rat(0));
  coeffs.back() = c;
  return TPoly{std::move(coeffs)};
}

Rat TPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[static_cast<size_t>(k)];
}

Rat TPoly::leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

void TPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

TPoly operator+(const TPoly& p, const TPoly& q) {
  std::vector<Rat> out(std::max(p.coeffs_.size(), q.coeffs_.size()), Rat(0));
  for (size_t i = 0; i < p.coeffs_.size(); ++i) out[i] += p.coeffs_[i];
  for (size_t i = 0; i < q.coeffs_.size(); ++i) out[i] += q.coeffs_[i];
  return TPoly{std::move(out)};
}

TPoly operator-(const TPoly& p, const TPoly& q) {
  std::vector<Rat> out(std::max(p.coeffs_.size(), q.coeffs_.size()), Rat(0));
  for (size_t i = 0; i < p.coeffs_.size(); ++i) out[i] += p.coeffs_[i];
  for (size_t i = 0; i < q.coeffs_.size(); ++i) out[i] -= q.coeffs_[i];
  return TPoly{std::move(out)};
}

TPoly operator*(const TPoly& p, const TPoly& q) {
  if (p.is_zero() || q.is_zero()) return TPoly{};
  std::vector<Rat> out(p.coeffs_.size() + q.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < p.coeffs_.size(); ++i) {
    for (size_t j = 0; j < q.coeffs_.size(); ++j) {
      out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
  }
  return TPoly{std::move(out)};
}

TPoly operator*(const Rat& c, const TPoly& p) {
  std::vector<Rat> out = p.coeffs();
  for (Rat& x : out) x *= c;
  return TPoly{std::move(out)};
}

TPoly exact_div(const TPoly& num, const TPoly& den) {
  if (den.is_zero()) throw DomainError("division by the zero polynomial");
  if (num.is_zero()) return TPoly{};
  if (num.degree() < den.degree()) throw DomainError("division leaves a remainder");
  std::vector<Rat> rem = num.coeffs();
  std::vector<Rat> quot(static_cast<size_t>(num.degree() - den.degree()) + 1, Rat(0));
  for (int k = num.degree() - den.degree(); k >= 0; --k) {
    Rat c = rem[static_cast<size_t>(k + den.degree())] / den.leading();
    quot[static_cast<size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= den.degree(); ++j) {
      rem[static_cast<size_t>(k + j)] -= c * den.coeff(j);
    }
  }
  for (const Rat& c : rem) {
    if (c != 0) throw DomainError("division leaves a remainder");
  }
  return TPoly{std::move(quot)};
}

TPoly poly_gcd(TPoly u, TPoly v) {
  while (!v.is_zero()) {
    // remainder of u by v
    while (!u.is_zero() && u.degree() >= v.degree()) {
      TPoly shift = TPoly::monomial(u.leading() / v.leading(), u.degree() - v.degree());
      u -= shift * v;
    }
    std::swap(u, v);
  }
  if (u.is_zero()) return u;
  return (Rat(1) / u.leading()) * u;
}

std::string to_text(const Rat& r) { return r.get_str(); }

std::string to_text(const TPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    Rat c = p.coeff(k);
    if (c == 0) continue;
    if (!out.empty()) {
      out += c > 0 ? " + " : " - ";
      c = abs(c);
    } else if (c < 0) {
      out += "-";
      c = abs(c);
    }
    if (k == 0) {
      out += to_text(c);
    } else {
      if (c != 1) out += to_text(c) + "*";
      out += k == 1 ? "t" : "t^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace stairs
