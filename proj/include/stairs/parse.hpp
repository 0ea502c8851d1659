#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "stairs/staircase.hpp"

namespace stairs {

/// Canonical text for a monomial: "1", "x", "y^3", "x^2*y", ...
std::string to_text(const Monomial& m);

/// Comma-joined canonical text of a monomial list.
std::string to_text(const std::vector<Monomial>& ms);

/// Canonical label of a staircase: the text of its minimal generators.
std::string to_text(const Staircase& e);

/// Parses "x^2*y", "1", etc.  Whitespace is ignored.
Monomial monomial_from_text(const std::string& s);

/// Parses either a comma-separated monomial list ("y^4,x*y^2,x^5") or an
/// explicit exponent-pair list ("(0,4),(1,2),(5,0)").
std::vector<Monomial> monomial_list_from_text(const std::string& s);

/// staircase_from_generators applied to monomial_list_from_text.
Staircase staircase_from_text(const std::string& s);

/// Parses "a,b", e.g. "1,-1".
Grading grading_from_text(const std::string& s);

/// Parses "h0,h1,...", e.g. "1,2,3,2,1".
HilbertFunction hilbert_from_text(const std::string& s);

/// Parses "MxN", e.g. "5x5".
Box box_from_text(const std::string& s);

nlohmann::json to_json(const Staircase& e);
Staircase staircase_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Grading& g);
Grading grading_from_json(const nlohmann::json& j);

}  // namespace stairs
