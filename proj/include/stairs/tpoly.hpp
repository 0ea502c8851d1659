#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace stairs {

using Rat = mpq_class;

// Polynomial in one variable t with exact rational coefficients, stored
// densely from the constant term upward.  The zero polynomial is the empty
// coefficient list; nonzero polynomials never carry trailing zeros.
class TPoly {
 public:
  TPoly() = default;
  explicit TPoly(std::vector<Rat> coeffs);
  static TPoly constant(const Rat& c);
  static TPoly monomial(const Rat& c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rat coeff(int k) const;
  Rat leading() const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  friend TPoly operator+(const TPoly& p, const TPoly& q);
  friend TPoly operator-(const TPoly& p, const TPoly& q);
  friend TPoly operator*(const TPoly& p, const TPoly& q);
  TPoly& operator+=(const TPoly& q) { return *this = *this + q; }
  TPoly& operator-=(const TPoly& q) { return *this = *this - q; }
  TPoly& operator*=(const TPoly& q) { return *this = *this * q; }
  bool operator==(const TPoly&) const = default;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

TPoly operator*(const Rat& c, const TPoly& p);

// Quotient of an exact division; throws DomainError when the divisor is zero
// or the division leaves a remainder.
TPoly exact_div(const TPoly& num, const TPoly& den);

// Monic greatest common divisor; poly_gcd(0, 0) = 0.
TPoly poly_gcd(TPoly u, TPoly v);

std::string to_text(const Rat& r);
std::string to_text(const TPoly& p);

}  // namespace stairs
