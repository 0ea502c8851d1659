#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "stairs/arrows.hpp"
#include "stairs/monomial.hpp"
#include "stairs/staircase.hpp"
#include "stairs/tpoly.hpp"

namespace stairs {

// One term c(t) * x^alpha y^beta of a family generator.
struct FamilyTerm {
  Monomial m;
  TPoly c;
  bool operator==(const FamilyTerm&) const = default;
};

// One generator of a graded piece, as a finite sum of terms.
using FamilyGenerator = std::vector<FamilyTerm>;

// A one-parameter family of quasi-homogeneous ideals, given degree by degree:
// explicit generators up to a top degree, the full space in every degree
// beyond it, and the zero space in listed-range degrees with no generators.
class GradedFamily {
 public:
  GradedFamily(Grading g, long long top,
               std::map<long long, std::vector<FamilyGenerator>> degrees,
               std::string name = "");

  const Grading& grading() const { return grading_; }
  long long top() const { return top_; }
  const std::map<long long, std::vector<FamilyGenerator>>& degrees() const {
    return degrees_;
  }
  const std::string& name() const { return name_; }

 private:
  Grading grading_;
  long long top_;
  std::map<long long, std::vector<FamilyGenerator>> degrees_;
  std::string name_;
};

GradedFamily family_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GradedFamily& f);
GradedFamily family_from_file(const std::string& path);

// Echelon basis of one graded piece: rows are coordinate vectors against the
// degree slice listed from the largest monomial down, fully reduced with
// pivots on the largest monomials first, entries kept polynomial in t and
// cleared to content.
struct PieceEchelon {
  std::vector<Monomial> slice;
  std::vector<std::vector<TPoly>> rows;
  std::vector<int> pivots;
};
PieceEchelon piece_echelon(const GradedFamily& f, long long degree);

// Staircase of the fiber at generic t: complement of the echelon pivot
// monomials in degrees up to the top, nothing beyond.
Staircase generic_initial_staircase(const GradedFamily& f);

// Throws ClosureError unless x and y carry every graded piece into the span
// of the next one (degrees beyond the top count as full).
void check_generic_closure(const GradedFamily& f);

// Limit of a spanned subspace as t grows without bound: the top-t-degree
// coefficient vectors, after cancelling rational dependencies among them by
// subtracting t-power multiples of one row from another.  Throws
// DependenceError when the input rows are dependent over rational functions.
std::vector<std::vector<Rat>> limit_subspace(std::vector<std::vector<TPoly>> rows);

// Echelon form of the limit of one graded piece.
struct LimitPiece {
  std::vector<Monomial> slice;
  std::vector<std::vector<Rat>> rows;
  std::vector<int> pivots;
};
LimitPiece limit_piece(const GradedFamily& f, long long degree);

// Staircase of the limit fiber, read off the limit echelon pivots.
Staircase limit_staircase(const GradedFamily& f);

// Throws ClosureError unless the limit pieces themselves form an ideal.
void check_limit_closure(const GradedFamily& f);

// Canonical co-arrow system of the family: for each generic initial monomial
// m, a representative with initial monomial m is reduced until the monomial
// carrying its top t-power is as small as possible; the arrow sends m to that
// monomial.  The result is checked to be a valid co-arrow system whose ends
// are exactly the non-cells of the limit; a gap throws ValidationError.
CoArrowSystem extract_cosystem(const GradedFamily& f, const Box& box);

struct LimitReport {
  Staircase generic;
  Staircase limit;
  std::vector<long long> per_degree_ranks;  // degrees 0..top of the family
  bool closure_ok = false;
  bool generic_matches = false;
  bool limit_matches = false;
  bool cosystem_ok = false;
  std::optional<CoArrowSystem> extracted;
  bool passed() const {
    return closure_ok && generic_matches && limit_matches && cosystem_ok;
  }
};

// Certifies that the family degenerates the fiber staircase `from` to the
// limit staircase `to`: checks both closure properties, both staircase
// matches, and that the extracted co-arrow system reproduces the limit.
// Mismatches are reported in the result; malformed families throw.
LimitReport verify_witness(const GradedFamily& f, const Staircase& from,
                           const Staircase& to, std::optional<Box> box = {});

}  // namespace stairs
