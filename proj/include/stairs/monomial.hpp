#pragma once

#include <compare>
#include <vector>

namespace stairs {

/// A monomial x^alpha y^beta in two variables, stored as its exponent pair.
///
/// The built-in comparison is lexicographic on (alpha, beta) and is used for
/// canonical cell lists and set containers only; the graded order that drives
/// everything else lives on Grading.
struct Monomial {
  int alpha = 0;
  int beta = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// A weight pair (a, b) with a > 0 > b and gcd(a, -b) = 1.
///
/// The degree of x^alpha y^beta is -b*alpha + a*beta, so both variables have
/// positive degree and every degree contains finitely many monomials.  The
/// induced monomial order compares degrees first and breaks ties by the
/// y-exponent; it is a total order of type omega, exposed through rank() and
/// unrank().
///
/// A pair with a < 0 < b is normalized by negating both entries.  Anything
/// else (zero entries, two entries of equal sign, non-coprime entries) is
/// rejected.
class Grading {
 public:
  Grading(int a, int b);

  int a() const { return a_; }
  int b() const { return b_; }

  long long degree(Monomial m) const {
    return static_cast<long long>(-b_) * m.alpha +
           static_cast<long long>(a_) * m.beta;
  }

  std::strong_ordering compare(Monomial m1, Monomial m2) const;
  bool less(Monomial m1, Monomial m2) const { return compare(m1, m2) < 0; }

  /// Number of monomials of the given degree.
  long long count_in_degree(long long d) const;

  /// All monomials of the given degree, ascending in the monomial order
  /// (equivalently, by increasing y-exponent).
  std::vector<Monomial> degree_slice(long long d) const;

  /// Position of m in the enumeration 0, 1, 2, ... of all monomials.
  long long rank(Monomial m) const;

  /// Inverse of rank().
  Monomial unrank(long long r) const;

  friend bool operator==(const Grading&, const Grading&) = default;

 private:
  int a_;
  int b_;
};

}  // namespace stairs
