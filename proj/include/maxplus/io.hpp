#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "maxplus/core.hpp"
#include "maxplus/extremality.hpp"
#include "maxplus/witness.hpp"

// Instance text format (ASCII):
//
//   n
//   a_11 a_12 ... a_1n
//   ...
//   a_n1 a_n2 ... a_nn
//
//   x_1 x_2 ... x_n        (optional)
//
// A token is an integer, a rational p/q, or -inf (any case) for BOTTOM.
// Blank lines are ignored. Vector files hold a single row of n tokens.

namespace maxplus {

struct Instance {
  Matrix a;
  std::optional<Vector> x;
};

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::istringstream is{std::string(text.substr(start, end - start))};
    Line line{number, {}};
    for (std::string tok; is >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

}  // namespace detail

/// Parses one token; `line` is only used for error messages.
inline Scalar parse_token(std::string_view tok, std::size_t line = 0) {
  std::string lower(tok);
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "-inf") return bottom;

  std::string_view body = tok;
  std::string sign;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    if (body[0] == '-') sign = "-";
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!detail::all_digits(num) || !detail::all_digits(den))
    throw ParseError("malformed token '" + std::string(tok) + "'", line);
  Integer q(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator in '" + std::string(tok) + "'", line);
  return Scalar(Rational(Integer(sign + std::string(num), 10), q));
}

namespace detail {

inline Vector parse_row(const Line& line, std::size_t n) {
  if (line.tokens.size() != n)
    throw ParseError("expected " + std::to_string(n) + " tokens, found " + std::to_string(line.tokens.size()),
                     line.number);
  Vector v(n);
  for (Index j = 0; j < n; ++j) v[j] = parse_token(line.tokens[j], line.number);
  return v;
}

}  // namespace detail

inline Instance parse_instance(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty()) throw ParseError("empty input", 1);
  const auto& head = lines[0];
  if (head.tokens.size() != 1 || !detail::all_digits(head.tokens[0]))
    throw ParseError("first line must hold the dimension n", head.number);
  const unsigned long n = std::stoul(head.tokens[0]);
  if (n == 0) throw ParseError("dimension must be positive", head.number);
  if (lines.size() < n + 1) throw ParseError("expected " + std::to_string(n) + " matrix rows", lines.back().number);
  if (lines.size() > n + 2) throw ParseError("unexpected trailing content", lines[n + 2].number);

  Instance inst{Matrix(n), std::nullopt};
  for (Index i = 0; i < n; ++i) {
    const Vector row = detail::parse_row(lines[i + 1], n);
    for (Index j = 0; j < n; ++j) inst.a(i, j) = row[j];
  }
  if (lines.size() == n + 2) inst.x = detail::parse_row(lines[n + 1], n);
  return inst;
}

inline Vector parse_vector(std::string_view text, std::size_t n) {
  const auto lines = detail::tokenize(text);
  if (lines.size() != 1) throw ParseError("a vector file holds exactly one non-blank line", lines.empty() ? 1 : lines[1].number);
  return detail::parse_row(lines[0], n);
}

inline std::string format_vector(const Vector& x) {
  std::string out;
  for (Index i = 0; i < x.size(); ++i) {
    if (i) out += ' ';
    out += x[i].to_string();
  }
  return out;
}

/// Normalized form: canonical rationals, "-inf", single spaces, blank line
/// before the vector.
inline std::string write_instance(const Matrix& a, const std::optional<Vector>& x = std::nullopt) {
  std::string out = std::to_string(a.dim()) + "\n";
  for (Index i = 0; i < a.dim(); ++i) {
    for (Index j = 0; j < a.dim(); ++j) {
      if (j) out += ' ';
      out += a(i, j).to_string();
    }
    out += '\n';
  }
  if (x) out += "\n" + format_vector(*x) + "\n";
  return out;
}

// JSON. Node indices are 1-based; vector entries use the token grammar.

inline nlohmann::json to_json(const Vector& x) {
  auto arr = nlohmann::json::array();
  for (const auto& v : x) arr.push_back(v.to_string());
  return arr;
}

inline Vector vector_from_json(const nlohmann::json& arr) {
  if (!arr.is_array()) throw InputError("vector must be a JSON array");
  Vector v(arr.size());
  for (Index i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_string()) throw InputError("vector entries must be strings");
    v[i] = parse_token(arr[i].get<std::string>());
  }
  return v;
}

inline nlohmann::json nodes_to_json(const std::vector<Index>& nodes) {
  auto arr = nlohmann::json::array();
  for (Index v : nodes) arr.push_back(v + 1);
  return arr;
}

inline nlohmann::json to_json(const WitnessPair& w) {
  return {{"x1", to_json(w.x1)}, {"x2", to_json(w.x2)}, {"provenance", std::string(to_string(w.provenance))}};
}

inline nlohmann::json evidence_to_json(const Evidence& e) {
  nlohmann::json out = nlohmann::json::object();
  if (const auto* iso = std::get_if<IsolatedSubsetEvidence>(&e)) {
    out["isolated_set"] = nodes_to_json(iso->subset);
    out["complement"] = nodes_to_json(iso->complement);
  } else if (const auto* cyc = std::get_if<DisjointCyclesEvidence>(&e)) {
    out["cycle1"] = nodes_to_json(cyc->first);
    out["cycle2"] = nodes_to_json(cyc->second);
  } else if (const auto* var = std::get_if<VariableNodesEvidence>(&e)) {
    out["variable_nodes"] = nodes_to_json({var->first, var->second});
  }
  return out;
}

inline nlohmann::json to_json(const Verdict& v, const std::optional<WitnessPair>& witness = std::nullopt) {
  nlohmann::json out;
  out["extremal"] = v.extremal;
  out["condition"] = v.condition ? nlohmann::json(std::string(to_string(*v.condition))) : nlohmann::json(nullptr);
  out["branch"] = std::string(to_string(v.branch));
  out["evidence"] = evidence_to_json(v.evidence);
  if (v.fountain) out["evidence"]["fountain_node"] = v.fountain->o + 1;
  out["witness"] = witness ? to_json(*witness) : nlohmann::json(nullptr);
  return out;
}

}  // namespace maxplus
