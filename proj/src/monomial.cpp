#include "stairs/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace stairs {

Grading::Grading(int a, int b) : a_(a), b_(b) {
  if (a_ < 0 && b_ > 0) {
    a_ = -a_;
    b_ = -b_;
  }
  if (a_ <= 0 || b_ >= 0) {
    throw std::invalid_argument(
        "grading weights must satisfy a > 0 > b after sign normalization");
  }
  if (std::gcd(a_, -b_) != 1) {
    throw std::invalid_argument("grading weights must be coprime");
  }
}

std::strong_ordering Grading::compare(Monomial m1, Monomial m2) const {
  long long d1 = degree(m1);
  long long d2 = degree(m2);
  if (d1 != d2) return d1 <=> d2;
  return m1.beta <=> m2.beta;
}

long long Grading::count_in_degree(long long d) const {
  if (d < 0) return 0;
  long long count = 0;
  for (long long beta = 0; a_ * beta <= d; ++beta) {
    if ((d - a_ * beta) % (-b_) == 0) ++count;
  }
  return count;
}

std::vector<Monomial> Grading::degree_slice(long long d) const {
  std::vector<Monomial> out;
  if (d < 0) return out;
  for (long long beta = 0; a_ * beta <= d; ++beta) {
    long long rem = d - a_ * beta;
    if (rem % (-b_) == 0) {
      out.push_back(Monomial{static_cast<int>(rem / (-b_)),
                             static_cast<int>(beta)});
    }
  }
  return out;
}

long long Grading::rank(Monomial m) const {
  if (m.alpha < 0 || m.beta < 0) {
    throw std::invalid_argument("monomial exponents must be nonnegative");
  }
  long long d = degree(m);
  long long r = 0;
  for (long long dd = 0; dd < d; ++dd) r += count_in_degree(dd);
  for (long long beta = 0; beta < m.beta; ++beta) {
    if ((d - a_ * beta) >= 0 && (d - a_ * beta) % (-b_) == 0) ++r;
  }
  return r;
}

Monomial Grading::unrank(long long r) const {
  if (r < 0) throw std::invalid_argument("rank must be nonnegative");
  for (long long d = 0;; ++d) {
    long long c = count_in_degree(d);
    if (r < c) return degree_slice(d)[static_cast<size_t>(r)];
    r -= c;
  }
}

}  // namespace stairs
