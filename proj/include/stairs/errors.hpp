#pragma once

#include <stdexcept>

namespace stairs {

// Malformed textual or JSON input.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A staircase does not fit inside the requested box.
struct FitError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An operation was applied to an argument outside its domain.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A structural invariant of an arrow system or family was violated.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A graded family is not closed under multiplication by x and y.
struct ClosureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input vectors were linearly dependent over the rational function field.
struct DependenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exhaustive sweep would exceed the configured work budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace stairs
