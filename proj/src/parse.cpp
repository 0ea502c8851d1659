#include "stairs/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "stairs/errors.hpp"

namespace stairs {

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

long long parse_int(const std::string& s) {
  if (s.empty()) throw ParseError("expected an integer");
  size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("malformed integer: '" + s + "'");
  }
  if (pos != s.size()) throw ParseError("malformed integer: '" + s + "'");
  return v;
}

std::vector<Monomial> pairs_from_text(const std::string& s) {
  std::vector<Monomial> out;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(') throw ParseError("expected '(' in exponent-pair list");
    size_t close = s.find(')', i);
    if (close == std::string::npos) throw ParseError("unbalanced '(' in exponent-pair list");
    std::vector<std::string> nums = split(s.substr(i + 1, close - i - 1), ',');
    if (nums.size() != 2) throw ParseError("exponent pair must have two entries");
    long long a = parse_int(nums[0]);
    long long b = parse_int(nums[1]);
    if (a < 0 || b < 0) throw ParseError("exponents must be nonnegative");
    out.push_back(Monomial{static_cast<int>(a), static_cast<int>(b)});
    i = close + 1;
    if (i < s.size()) {
      if (s[i] != ',') throw ParseError("expected ',' between exponent pairs");
      ++i;
    }
  }
  if (out.empty()) throw ParseError("empty exponent-pair list");
  return out;
}

}  // namespace

std::string to_text(const Monomial& m) {
  if (m.alpha == 0 && m.beta == 0) return "1";
  std::ostringstream os;
  if (m.alpha > 0) {
    os << 'x';
    if (m.alpha > 1) os << '^' << m.alpha;
  }
  if (m.beta > 0) {
    if (m.alpha > 0) os << '*';
    os << 'y';
    if (m.beta > 1) os << '^' << m.beta;
  }
  return os.str();
}

std::string to_text(const std::vector<Monomial>& ms) {
  std::ostringstream os;
  for (size_t i = 0; i < ms.size(); ++i) {
    if (i) os << ',';
    os << to_text(ms[i]);
  }
  return os.str();
}

std::string to_text(const Staircase& e) { return to_text(minimal_generators(e)); }

Monomial monomial_from_text(const std::string& raw) {
  std::string s = strip(raw);
  if (s.empty()) throw ParseError("empty monomial");
  if (s == "1") return Monomial{0, 0};
  Monomial m{0, 0};
  for (const std::string& factor : split(s, '*')) {
    if (factor.empty()) throw ParseError("empty factor in monomial '" + raw + "'");
    char var = factor[0];
    if (var != 'x' && var != 'y') {
      throw ParseError("expected variable x or y in '" + raw + "'");
    }
    long long exp = 1;
    if (factor.size() > 1) {
      if (factor[1] != '^') throw ParseError("expected '^' in '" + raw + "'");
      exp = parse_int(factor.substr(2));
      if (exp < 0) throw ParseError("exponents must be nonnegative");
    }
    if (var == 'x') {
      m.alpha += static_cast<int>(exp);
    } else {
      m.beta += static_cast<int>(exp);
    }
  }
  return m;
}

std::vector<Monomial> monomial_list_from_text(const std::string& raw) {
  std::string s = strip(raw);
  if (s.empty()) throw ParseError("empty monomial list");
  if (s[0] == '(') return pairs_from_text(s);
  std::vector<Monomial> out;
  for (const std::string& part : split(s, ',')) out.push_back(monomial_from_text(part));
  return out;
}

Staircase staircase_from_text(const std::string& s) {
  return staircase_from_generators(monomial_list_from_text(s));
}

Grading grading_from_text(const std::string& raw) {
  std::vector<std::string> parts = split(strip(raw), ',');
  if (parts.size() != 2) throw ParseError("grading must be 'a,b'");
  long long a = parse_int(parts[0]);
  long long b = parse_int(parts[1]);
  try {
    return Grading{static_cast<int>(a), static_cast<int>(b)};
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

HilbertFunction hilbert_from_text(const std::string& raw) {
  std::vector<long long> h;
  for (const std::string& part : split(strip(raw), ',')) {
    long long v = parse_int(part);
    if (v < 0) throw ParseError("Hilbert function entries must be nonnegative");
    h.push_back(v);
  }
  return HilbertFunction{std::move(h)};
}

Box box_from_text(const std::string& raw) {
  std::vector<std::string> parts = split(strip(raw), 'x');
  if (parts.size() != 2) throw ParseError("box must be 'MxN'");
  long long m = parse_int(parts[0]);
  long long n = parse_int(parts[1]);
  if (m < 1 || n < 1) throw ParseError("box sides must be positive");
  return Box{static_cast<int>(m), static_cast<int>(n)};
}

nlohmann::json to_json(const Staircase& e) {
  nlohmann::json gens = nlohmann::json::array();
  for (const Monomial& m : minimal_generators(e)) gens.push_back({m.alpha, m.beta});
  return nlohmann::json{{"generators", gens}};
}

Staircase staircase_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array()) {
    throw ParseError("staircase JSON must be {\"generators\": [[a,b],...]}");
  }
  std::vector<Monomial> gens;
  for (const auto& pair : j["generators"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw ParseError("each generator must be an exponent pair [a,b]");
    }
    int a = pair[0].get<int>();
    int b = pair[1].get<int>();
    if (a < 0 || b < 0) throw ParseError("exponents must be nonnegative");
    gens.push_back(Monomial{a, b});
  }
  if (gens.empty()) throw ParseError("generator list must be nonempty");
  return staircase_from_generators(gens);
}

nlohmann::json to_json(const Grading& g) {
  return nlohmann::json{{"a", g.a()}, {"b", g.b()}};
}

Grading grading_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b") ||
      !j["a"].is_number_integer() || !j["b"].is_number_integer()) {
    throw ParseError("grading JSON must be {\"a\": int, \"b\": int}");
  }
  try {
    return Grading{j["a"].get<int>(), j["b"].get<int>()};
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace stairs
