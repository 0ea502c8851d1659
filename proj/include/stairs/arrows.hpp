#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stairs/staircase.hpp"

namespace stairs {

/// A degree-preserving arrow: origin x^alpha y^beta, end = origin +
/// lambda*(a, b).  Systems on a staircase use lambda <= 0 (the end is never
/// below the origin in the monomial order); co-systems on a complement use
/// lambda >= 0.
struct Arrow {
  Monomial origin;
  long long lambda = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

Monomial arrow_end(const Grading& g, const Arrow& f);

enum class ViolationKind {
  LambdaSign,
  EndNegative,
  DuplicateEnd,
  EndOutsideBox,
  DivisionX,
  DivisionY,
  MultiplicationX,
  MultiplicationY,
  ComplementNotStaircase,
};

struct Violation {
  ViolationKind kind;
  Monomial at;
  std::string message;
};

/// One arrow per cell of a base staircase, stored as the multipliers lambda
/// parallel to base.cells().  Plain data; semantic invariants (distinct
/// ends, division compatibility) are checked by validate_system.
class ArrowSystem {
 public:
  ArrowSystem(Grading g, Staircase base, std::vector<long long> lambdas);

  const Grading& grading() const { return grading_; }
  const Staircase& base() const { return base_; }
  const std::vector<long long>& lambdas() const { return lambdas_; }
  Arrow arrow(size_t i) const { return Arrow{base_.cells()[i], lambdas_[i]}; }
  bool is_identity() const;

  friend bool operator==(const ArrowSystem&, const ArrowSystem&) = default;

 private:
  Grading grading_;
  Staircase base_;
  std::vector<long long> lambdas_;
};

/// Checks lambda <= 0, nonnegative end exponents, pairwise distinct ends,
/// and division compatibility: for every end q and every quotient q/x, q/y,
/// some arrow ends there with a multiplier of absolute value <= |lambda(q)|.
/// Checking the two immediate quotients suffices: |lambda| bounds compose
/// along chains of single-variable quotients, so any divisor is covered by
/// transitivity.
std::vector<Violation> validate_system(const ArrowSystem& s);

/// The set of arrow ends.  For a valid system this is again a staircase of
/// the same size and degree counts as the base.  Throws ValidationError when
/// the system is invalid.
Staircase apply_system(const ArrowSystem& s);

/// Searches for a system on e whose ends are exactly f.  Returns the first
/// solution in canonical order (ends of f processed in increasing monomial
/// order, smallest |lambda| tried first), or nullopt.  Sizes must match for
/// a system to exist; |e| != |f| yields nullopt.
std::optional<ArrowSystem> find_system(const Grading& g, const Staircase& e,
                                       const Staircase& f);

/// Arrows on the complement of a staircase inside a box: finitely many
/// listed arrows with lambda >= 0 whose origins are complement monomials
/// inside the box; every unlisted complement monomial carries an implicit
/// identity arrow.
class CoArrowSystem {
 public:
  CoArrowSystem(Grading g, Box box, Staircase base, std::vector<Arrow> listed);

  const Grading& grading() const { return grading_; }
  const Box& box() const { return box_; }
  const Staircase& base() const { return base_; }
  const std::vector<Arrow>& listed() const { return listed_; }

  friend bool operator==(const CoArrowSystem&, const CoArrowSystem&) = default;

 private:
  Grading grading_;
  Box box_;
  Staircase base_;
  std::vector<Arrow> listed_;
};

/// Checks pairwise distinct ends (including collisions with the implicit
/// identities), that the non-end monomials form a staircase, and
/// multiplication compatibility: whenever q and m*q are both ends for a
/// variable m, the arrow ending at m*q is no longer than the arrow ending
/// at q.
std::vector<Violation> validate_cosystem(const CoArrowSystem& s);

/// The staircase whose complement is the set of arrow ends.  Throws
/// ValidationError when the co-system is invalid.
Staircase apply_cosystem(const CoArrowSystem& s);

/// Flips a system on a dual staircase through the box rotation
/// phi(x, y) = (m-1-x, n-1-y) into a co-system on the complement of
/// dual(base, box).  Requires every arrow end to lie inside the box
/// (DomainError otherwise).
CoArrowSystem psi_forward(const ArrowSystem& s, const Box& box);

/// Inverse of psi_forward: rebuilds the system on dual(base, box) from a
/// co-system.  Requires every listed arrow end to lie inside the box
/// (DomainError otherwise).
ArrowSystem psi_backward(const CoArrowSystem& s);

struct NecessaryConditionReport {
  bool yameogo = false;
  bool cond1 = false;
  bool cond2 = false;
  Box box;
  std::optional<ArrowSystem> witness1;  // system on e with ends f
  std::optional<ArrowSystem> witness2;  // system on dual(e) with ends dual(f)
  bool holds() const { return cond1 && cond2; }
};

/// Decides the incidence conditions for the ordered pair (e, f): profile
/// dominance, a system e -> f, and a system dual(e) -> dual(f) inside the
/// box (default: n x n with n = |e|).  Requires |e| = |f| and both
/// staircases to fit the box.
NecessaryConditionReport necessary_condition(const Grading& g, const Staircase& e,
                                             const Staircase& f,
                                             std::optional<Box> box = {});

}  // namespace stairs
