#pragma once

/// @file series_io.hpp
/// @brief JSON and LaTeX serialization for Series.
///
/// The JSON layout is stable and byte-deterministic (terms in the canonical
/// monomial order, object keys in canonical variable order):
///
///   {
///     "ring":  {"kind": "beta"},                  // or "integer", "rational",
///                                                 // {"kind":"universal","gens":D}
///     "trunc": 6,
///     "weights": {"c2": 2},                       // only variables of weight != 1
///     "terms": [
///       {"mono": {},               "coeff": "1"},
///       {"mono": {"x1":1, "y1":2}, "coeff": "-2/3*beta"}
///     ]
///   }
///
/// series_from_json() accepts exactly what series_to_json() emits and
/// validates degrees against the declared truncation order.

#include "fgls/series.hpp"

#include <json.hpp>

#include <string>

namespace fgls {

using Json = nlohmann::ordered_json;

inline Json ring_to_json(const CoeffRing& ring) {
  Json j;
  switch (ring.kind()) {
    case RingKind::integer: j["kind"] = "integer"; break;
    case RingKind::rational: j["kind"] = "rational"; break;
    case RingKind::beta: j["kind"] = "beta"; break;
    case RingKind::universal:
      j["kind"] = "universal";
      j["gens"] = ring.gen_count();
      break;
  }
  return j;
}

inline CoeffRing ring_from_json(const Json& j) {
  detail::require(j.is_object() && j.contains("kind"),
                  "ring JSON must be an object with a 'kind' field");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "integer") return CoeffRing::integers();
  if (kind == "rational") return CoeffRing::rationals();
  if (kind == "beta") return CoeffRing::with_beta();
  if (kind == "universal") {
    detail::require(j.contains("gens"), "universal ring JSON needs 'gens'");
    return CoeffRing::universal(j.at("gens").get<int>());
  }
  detail::fail("unknown ring kind '" + kind + "'");
}

inline Json series_to_json(const Series& f) {
  Json j;
  j["ring"] = ring_to_json(f.ring());
  j["trunc"] = f.trunc();
  const VarTable& vt = VarTable::instance();
  Json weights = Json::object();
  for (VarId v : f.support()) {
    if (vt.weight(v) != 1) weights[vt.name(v)] = vt.weight(v);
  }
  if (!weights.empty()) j["weights"] = weights;
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) {
    Json t;
    Json mono = Json::object();
    for (const auto& [v, e] : m.factors()) mono[vt.name(v)] = e;
    t["mono"] = mono;
    t["coeff"] = c.str(f.ring());
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

inline Series series_from_json(const Json& j) {
  detail::require(j.is_object(), "series JSON must be an object");
  detail::require(j.contains("ring") && j.contains("trunc") &&
                      j.contains("terms"),
                  "series JSON needs 'ring', 'trunc', and 'terms'");
  CoeffRing ring = ring_from_json(j.at("ring"));
  int trunc = j.at("trunc").get<int>();
  detail::require(trunc >= 0, "series JSON: trunc must be >= 0");
  std::map<std::string, int> weights;
  if (j.contains("weights")) {
    for (const auto& [name, w] : j.at("weights").items())
      weights[name] = w.get<int>();
  }
  Series f(ring, trunc);
  detail::require(j.at("terms").is_array(), "series JSON: 'terms' must be an array");
  for (const auto& t : j.at("terms")) {
    detail::require(t.is_object() && t.contains("mono") && t.contains("coeff"),
                    "series JSON: each term needs 'mono' and 'coeff'");
    std::vector<Monomial::Factor> fs;
    for (const auto& [name, e] : t.at("mono").items()) {
      int weight = 1;
      auto wit = weights.find(name);
      if (wit != weights.end()) weight = wit->second;
      fs.emplace_back(var_id(name, weight), e.get<int>());
    }
    Monomial m = Monomial::from_factors(std::move(fs));
    detail::require(m.degree() <= trunc,
                    "series JSON: term degree exceeds declared trunc");
    Coeff c = Coeff::parse(ring, t.at("coeff").get<std::string>());
    detail::require(!c.is_zero(), "series JSON: zero coefficient stored");
    f.add_term(m, c);
  }
  return f;
}

// -- LaTeX ---------------------------------------------------------------

namespace detail {

inline std::string latex_gen_name(const CoeffRing& ring, int g) {
  if (ring.kind() == RingKind::beta) return "\\beta";
  return "m_{" + std::to_string(g + 1) + "}";
}

inline std::string latex_rational(const Rational& r) {
  return rational_to_string(r);
}

inline std::string latex_coeff_body(const CoeffRing& ring, const Coeff& c) {
  // Mirrors Coeff::str ordering; renders generators in LaTeX.
  std::vector<const std::pair<const Coeff::Exponents, Rational>*> ts;
  for (const auto& t : c.terms()) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [&](const auto* a, const auto* b) {
    int da = -Coeff::term_degree(ring, a->first);
    int db = -Coeff::term_degree(ring, b->first);
    if (da != db) return da < db;
    return a->first < b->first;
  });
  std::string out;
  bool first = true;
  for (const auto* t : ts) {
    const Rational mag = boost::multiprecision::abs(t->second);
    const bool neg = t->second < 0;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string gens;
    for (std::size_t i = 0; i < t->first.size(); ++i) {
      if (t->first[i] == 0) continue;
      if (!gens.empty()) gens += " ";
      gens += latex_gen_name(ring, static_cast<int>(i));
      if (t->first[i] > 1) gens += "^{" + std::to_string(t->first[i]) + "}";
    }
    if (gens.empty()) {
      out += latex_rational(mag);
    } else if (mag == 1) {
      out += gens;
    } else {
      out += latex_rational(mag) + " " + gens;
    }
  }
  return out.empty() ? "0" : out;
}

inline std::string latex_mono(const Monomial& m) {
  const VarTable& vt = VarTable::instance();
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    const VarInfo& info = vt.info(v);
    if (!out.empty()) out += " ";
    out += info.stem;
    if (info.index >= 0) out += "_{" + std::to_string(info.index) + "}";
    if (e > 1) out += "^{" + std::to_string(e) + "}";
  }
  return out;
}

}  // namespace detail

inline std::string series_to_latex(const Series& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    std::string mono = detail::latex_mono(m);
    if (c.is_constant()) {
      Rational v = c.constant_value();
      bool neg = v < 0;
      Rational mag = boost::multiprecision::abs(v);
      if (first) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      if (m.is_unit()) {
        out += detail::latex_rational(mag);
      } else if (mag == 1) {
        out += mono;
      } else {
        out += detail::latex_rational(mag) + " " + mono;
      }
    } else {
      if (!first) out += " + ";
      out += "\\left(" + detail::latex_coeff_body(f.ring(), c) + "\\right)";
      if (!m.is_unit()) out += " " + mono;
    }
    first = false;
  }
  return out;
}

}  // namespace fgls
