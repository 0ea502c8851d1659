#pragma once

#include <vector>

#include "stairs/monomial.hpp"

namespace stairs {

/// The box {(x, y) : x < m, y < n} of m*n lattice cells.
struct Box {
  int m = 1;
  int n = 1;

  friend bool operator==(const Box&, const Box&) = default;
};

/// A Hilbert function given by its values h[0], h[1], ... per degree.
/// Trailing zeros are trimmed; entries must be nonnegative.
class HilbertFunction {
 public:
  HilbertFunction() = default;
  explicit HilbertFunction(std::vector<long long> values);

  const std::vector<long long>& values() const { return h_; }
  long long at(size_t d) const { return d < h_.size() ? h_[d] : 0; }
  size_t length() const { return h_.size(); }
  long long total() const;

  friend bool operator==(const HilbertFunction&, const HilbertFunction&) =
      default;

 private:
  std::vector<long long> h_;
};

/// A finite set of cells in N^2 closed under division: whenever a cell has a
/// positive exponent, decrementing that exponent stays in the set.  The
/// complement of a staircase is exactly the set of monomials of a monomial
/// ideal of finite colength.
///
/// Cells are kept sorted lexicographically by (alpha, beta); equality and
/// ordering of staircases are those of the sorted cell lists.
class Staircase {
 public:
  Staircase() = default;
  explicit Staircase(std::vector<Monomial> cells);

  const std::vector<Monomial>& cells() const { return cells_; }
  size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  bool contains(Monomial m) const;
  bool fits(const Box& box) const;

  friend bool operator==(const Staircase&, const Staircase&) = default;
  friend auto operator<=>(const Staircase&, const Staircase&) = default;

 private:
  std::vector<Monomial> cells_;
};

/// Whether the given cells form a staircase (duplicates are rejected).
bool is_staircase(std::vector<Monomial> cells);

/// Minimal generators of the monomial ideal whose monomials are the
/// complement of e.  The empty staircase yields {1}.  Generators are sorted
/// by increasing x-exponent (equivalently decreasing y-exponent).
std::vector<Monomial> minimal_generators(const Staircase& e);

/// The staircase of the monomial ideal generated by gens.  Throws
/// ValidationError when the ideal has infinite colength (no pure power of
/// x or of y among the generators).
Staircase staircase_from_generators(const std::vector<Monomial>& gens);

/// Number of cells of e per degree.
HilbertFunction hilbert_function(const Grading& g, const Staircase& e);

/// All staircases with the given Hilbert function, sorted canonically
/// (lexicographically on their sorted cell lists).
std::vector<Staircase> enumerate_staircases(const Grading& g,
                                            const HilbertFunction& hf);

/// The dual staircase inside the box: the 180-degree rotation of the
/// complement, i.e. (x, y) is a dual cell iff (m-1-x, n-1-y) is not a cell
/// of e.  Throws FitError when e does not fit the box.  Involutive, and the
/// dual has m*n - |e| cells.
Staircase dual(const Staircase& e, const Box& box);

/// Minimal generators of the colon ideal ((x^m, y^n) : I) where I is the
/// monomial ideal attached to e, computed by direct membership tests.
/// Coincides with minimal_generators(dual(e, box)).
std::vector<Monomial> monomial_colon(const Staircase& e, const Box& box);

}  // namespace stairs
