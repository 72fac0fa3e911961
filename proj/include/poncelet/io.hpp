#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "poncelet/binary_form.hpp"
#include "poncelet/errors.hpp"
#include "poncelet/incidence.hpp"
#include "poncelet/matrix.hpp"
#include "poncelet/polynomial.hpp"
#include "poncelet/probe.hpp"
#include "poncelet/schwarzenberger.hpp"
#include "poncelet/surfaces.hpp"

// JSON encodings. Rationals are strings "p/q" (or "p"); polynomials are
// term lists {"exponents", "coeff"} with the leading graded-lex term first.

namespace poncelet::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& q) { return q.to_string(); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InvalidInput("expected a rational as \"p/q\" string or integer");
}

inline Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

inline RationalVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of rationals");
  RationalVector out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

inline Json to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

inline RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of rows");
  std::vector<RationalVector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  return RationalMatrix::from_rows(rows);
}

inline Json to_json(const MultiPoly& p) {
  Json out = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Json term;
    term["exponents"] = it->first;
    term["coeff"] = to_json(it->second);
    out.push_back(std::move(term));
  }
  return out;
}

/// num_vars is required for the zero polynomial and checked otherwise.
inline MultiPoly multipoly_from_json(const Json& j, std::optional<std::size_t> num_vars = std::nullopt) {
  if (!j.is_array()) throw InvalidInput("expected a polynomial term list");
  std::optional<std::size_t> nv = num_vars;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("exponents") || !t.contains("coeff"))
      throw InvalidInput("polynomial term needs exponents and coeff");
    const std::size_t len = t["exponents"].size();
    if (nv && *nv != len) throw InvalidInput("inconsistent exponent tuple lengths");
    nv = len;
  }
  if (!nv) throw InvalidInput("cannot infer the variable count of an empty polynomial");
  MultiPoly p(*nv);
  for (const auto& t : j) p.add_term(t["exponents"].get<Exponents>(), rational_from_json(t["coeff"]));
  return p;
}

inline Json to_json(const PolyMatrix& m) {
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["num_vars"] = m.num_vars();
  Json entries = Json::array();
  for (const auto& e : m.entries()) entries.push_back(to_json(e));
  out["entries"] = std::move(entries);
  return out;
}

inline Json to_json(const BinaryForm& f) {
  Json out;
  out["degree"] = f.degree();
  out["coeffs"] = to_json(f.coeffs());
  return out;
}

inline BinaryForm binary_form_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs")) throw InvalidInput("binary form needs coeffs");
  BinaryForm f(vector_from_json(j["coeffs"]));
  if (j.contains("degree") && j["degree"].get<long>() != static_cast<long>(f.degree()))
    throw InvalidInput("binary form degree does not match its coefficient count");
  return f;
}

inline Json to_json(const ParamPoint& t) {
  Json out;
  out["a"] = to_json(t.a());
  out["b"] = to_json(t.b());
  return out;
}

inline ParamPoint param_point_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b")) throw InvalidInput("parameter point needs a and b");
  return ParamPoint(rational_from_json(j["a"]), rational_from_json(j["b"]));
}

inline Json to_json(const PonceletSystem& sys) {
  Json out;
  out["n"] = sys.n();
  out["k"] = sys.k();
  Json sections = Json::array();
  for (const auto& f : sys.sections()) sections.push_back(to_json(f));
  out["sections"] = std::move(sections);
  return out;
}

inline PonceletSystem system_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("sections"))
    throw InvalidInput("system needs n, k and sections");
  if (!j["n"].is_number_integer() || !j["k"].is_number_integer()) throw InvalidInput("n and k must be integers");
  std::vector<BinaryForm> sections;
  for (const auto& s : j["sections"]) sections.push_back(binary_form_from_json(s));
  return PonceletSystem(j["n"].get<int>(), j["k"].get<int>(), std::move(sections));
}

inline Json to_json(const DarbouxReport& r) {
  Json out;
  out["pass"] = r.pass;
  Json vertices = Json::array();
  for (const auto& v : r.vertices) vertices.push_back(to_json(v));
  out["vertices"] = std::move(vertices);
  out["values"] = to_json(r.values);
  return out;
}

inline Json to_json(const CubicModel& m) {
  Json out;
  out["A"] = to_json(m.a);
  out["P"] = to_json(m.p);
  out["N"] = to_json(m.n);
  out["cubic"] = to_json(m.cubic);
  out["degenerate"] = m.degenerate;
  return out;
}

inline Json to_json(const ProbeReport& r) {
  Json out;
  out["case"] = r.name;
  out["n"] = r.n;
  out["k"] = r.k;
  out["rank"] = r.rank;
  out["ambient_dim"] = r.ambient_dim;
  out["image_dim"] = r.image_dim;
  out["dominant"] = r.dominant;
  out["stable"] = r.stable;
  out["sample_ranks"] = r.sample_ranks;
  out["prime"] = r.prime;
  out["modular_ranks"] = r.modular_ranks;
  out["modular_agrees"] = r.modular_agrees;
  return out;
}

inline Json to_json(const QuadricMinor& q) {
  Json out;
  out["rows"] = q.rows;
  out["minor"] = to_json(q.minor);
  out["rank"] = q.rank;
  out["unit_sections"] = q.unit_sections;
  out["sign"] = q.sign;
  return out;
}

/// Parses JSON text, mapping syntax errors to InvalidInput.
inline Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace poncelet::io
