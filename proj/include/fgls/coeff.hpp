#pragma once

/// @file coeff.hpp
/// @brief Coefficient rings: Z, Q, Z[beta], and Q[m_1, ..., m_D].
///
/// A series coefficient is an exact polynomial over Q in the ring's formal
/// generators.  The supported rings:
///
///   - integers / rationals: no generators (integrality is asserted on demand,
///     not enforced continuously — intermediate results of exact divisions may
///     pass through Q);
///   - beta: one generator "beta" of graded degree -1 (so beta^k * (degree-
///     (d+k) monomial) is homogeneous of degree d);
///   - universal(D): generators m_1, ..., m_D with m_k of graded degree -k.
///     This is a truncation of the Lazard ring in its rational presentation:
///     adjoining the coefficients of a formal logarithm makes the universal
///     formal group law expressible with polynomial (not just abstract)
///     coefficients.
///
/// Coefficients are value types with exact arithmetic and a deterministic
/// string form, e.g. "1 - 2*beta + 3*beta^2" or "-1/2*m1*m2^2".

#include "fgls/rational.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace fgls {

enum class RingKind { integer, rational, beta, universal };

class CoeffRing {
 public:
  static CoeffRing integers() { return CoeffRing(RingKind::integer, 0); }
  static CoeffRing rationals() { return CoeffRing(RingKind::rational, 0); }
  static CoeffRing with_beta() { return CoeffRing(RingKind::beta, 1); }
  static CoeffRing universal(int gen_count) {
    detail::require(gen_count >= 1, "universal ring needs >= 1 generator");
    return CoeffRing(RingKind::universal, gen_count);
  }

  CoeffRing() : CoeffRing(RingKind::integer, 0) {}

  RingKind kind() const { return kind_; }
  int gen_count() const { return gens_; }

  std::string gen_name(int g) const {
    detail::require(g >= 0 && g < gens_, "generator index out of range");
    return kind_ == RingKind::beta ? std::string("beta")
                                   : "m" + std::to_string(g + 1);
  }

  /// Graded degree of a generator (always negative).
  int gen_degree(int g) const {
    detail::require(g >= 0 && g < gens_, "generator index out of range");
    return kind_ == RingKind::beta ? -1 : -(g + 1);
  }

  std::string name() const {
    switch (kind_) {
      case RingKind::integer: return "integer";
      case RingKind::rational: return "rational";
      case RingKind::beta: return "beta";
      case RingKind::universal:
        return "universal(" + std::to_string(gens_) + ")";
    }
    return "?";
  }

  bool operator==(const CoeffRing& o) const {
    return kind_ == o.kind_ && gens_ == o.gens_;
  }
  bool operator!=(const CoeffRing& o) const { return !(*this == o); }

 private:
  CoeffRing(RingKind k, int g) : kind_(k), gens_(g) {}
  RingKind kind_;
  int gens_;
};

/// A polynomial in the ring generators with rational coefficients.
/// Keys are exponent vectors with trailing zeros stripped (so the canonical
/// key of a constant is the empty vector).
class Coeff {
 public:
  using Exponents = std::vector<int>;

  Coeff() = default;  ///< zero

  explicit Coeff(const Rational& c) {
    if (c != 0) terms_[Exponents{}] = c;
  }
  explicit Coeff(long long c) : Coeff(Rational(c)) {}

  static Coeff generator(const CoeffRing& ring, int g, int exp = 1) {
    detail::require(g >= 0 && g < ring.gen_count(),
                    "generator index out of range for ring " + ring.name());
    detail::require(exp >= 1, "generator exponent must be >= 1");
    Coeff c;
    Exponents e(static_cast<std::size_t>(g) + 1, 0);
    e[static_cast<std::size_t>(g)] = exp;
    c.terms_[std::move(e)] = 1;
    return c;
  }

  const std::map<Exponents, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.empty());
  }

  Rational constant_value() const {
    detail::require(is_constant(), "coefficient is not a constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }

  /// Rational number multiplying a given generator-exponent vector.
  Rational at(Exponents e) const {
    normalize(e);
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_integral() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
      return is_integer(t.second);
    });
  }

  Coeff operator-() const {
    Coeff r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  Coeff& operator+=(const Coeff& o) {
    for (const auto& [e, c] : o.terms_) {
      auto it = terms_.find(e);
      if (it == terms_.end()) {
        terms_.emplace(e, c);
      } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
      }
    }
    return *this;
  }

  Coeff& operator-=(const Coeff& o) { return *this += -o; }

  Coeff operator+(const Coeff& o) const {
    Coeff r = *this;
    return r += o;
  }
  Coeff operator-(const Coeff& o) const {
    Coeff r = *this;
    return r -= o;
  }

  Coeff operator*(const Coeff& o) const {
    Coeff r;
    for (const auto& [ea, ca] : terms_) {
      for (const auto& [eb, cb] : o.terms_) {
        Exponents e(std::max(ea.size(), eb.size()), 0);
        for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
        for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
        normalize(e);
        Rational& slot = r.terms_[e];
        slot += ca * cb;
        if (slot == 0) r.terms_.erase(e);
      }
    }
    return r;
  }

  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }

  Coeff operator*(const Rational& c) const {
    Coeff r;
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
  }

  Coeff operator/(const Rational& c) const {
    detail::require(c != 0, "division by zero");
    Coeff r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v / c;
    return r;
  }

  bool operator==(const Coeff& o) const { return terms_ == o.terms_; }
  bool operator!=(const Coeff& o) const { return !(*this == o); }

  /// Graded degree of a single term (<= 0): sum of exp * gen_degree.
  static int term_degree(const CoeffRing& ring, const Exponents& e) {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      d += e[i] * ring.gen_degree(static_cast<int>(i));
    return d;
  }

  /// If every term has the same graded degree, return it; zero counts as
  /// homogeneous of any degree (returns provided fallback).
  bool homogeneous_degree(const CoeffRing& ring, int* degree_out) const {
    bool first = true;
    int deg = 0;
    for (const auto& [e, c] : terms_) {
      (void)c;
      int d = term_degree(ring, e);
      if (first) {
        deg = d;
        first = false;
      } else if (d != deg) {
        return false;
      }
    }
    if (!first && degree_out) *degree_out = deg;
    return true;
  }

  /// Least graded degree over terms (most negative); 0 for the zero coeff.
  int min_degree(const CoeffRing& ring) const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
      (void)c;
      d = std::min(d, term_degree(ring, e));
    }
    return d;
  }

  /// Deterministic human-readable string, e.g. "1 - 2*beta + 3*beta^2".
  std::string str(const CoeffRing& ring) const {
    if (terms_.empty()) return "0";
    // Order: total |graded degree| ascending, then exponent vector
    // lexicographic.  For the beta ring this is beta^0, beta^1, beta^2, ...
    std::vector<const std::pair<const Exponents, Rational>*> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [&](const auto* a, const auto* b) {
      int da = -term_degree(ring, a->first);
      int db = -term_degree(ring, b->first);
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
        if (!gens.empty()) gens += "*";
        gens += ring.gen_name(static_cast<int>(i));
        if (t->first[i] > 1) gens += "^" + std::to_string(t->first[i]);
      }
      if (gens.empty()) {
        out += rational_to_string(mag);
      } else if (mag == 1) {
        out += gens;
      } else {
        out += rational_to_string(mag) + "*" + gens;
      }
    }
    return out;
  }

  /// Parse the format produced by str().  Accepts arbitrary spacing.
  static Coeff parse(const CoeffRing& ring, const std::string& text);

 private:
  static void normalize(Exponents& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
  }

  std::map<Exponents, Rational> terms_;
};

inline Coeff operator*(const Rational& c, const Coeff& x) { return x * c; }

namespace detail {

inline void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

}  // namespace detail

inline Coeff Coeff::parse(const CoeffRing& ring, const std::string& text) {
  std::size_t i = 0;
  detail::skip_ws(text, i);
  detail::require(i < text.size(), "empty coefficient string");
  Coeff result;
  bool expect_term = true;
  int sign = 1;
  while (i < text.size()) {
    detail::skip_ws(text, i);
    if (i >= text.size()) break;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -sign;
      ++i;
      expect_term = true;
      continue;
    }
    detail::require(expect_term, "unexpected token in coefficient: '" + text + "'");
    // one term: [rational]['*'] gen['^'exp] ('*' gen['^'exp])*
    Rational mag = 1;
    bool saw_number = false;
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/'))
        ++j;
      mag = rational_from_string(text.substr(i, j - i));
      i = j;
      saw_number = true;
      detail::skip_ws(text, i);
      if (i < text.size() && text[i] == '*') {
        ++i;
        detail::skip_ws(text, i);
      }
    }
    Exponents e;
    bool saw_gen = false;
    while (i < text.size() &&
           std::isalpha(static_cast<unsigned char>(text[i]))) {
      std::size_t j = i;
      while (j < text.size() &&
             std::isalnum(static_cast<unsigned char>(text[j])))
        ++j;
      std::string gname = text.substr(i, j - i);
      int g = -1;
      for (int k = 0; k < ring.gen_count(); ++k) {
        if (ring.gen_name(k) == gname) {
          g = k;
          break;
        }
      }
      detail::require(g >= 0, "unknown generator '" + gname + "' in ring " +
                                  ring.name());
      i = j;
      int exp = 1;
      detail::skip_ws(text, i);
      if (i < text.size() && text[i] == '^') {
        ++i;
        detail::skip_ws(text, i);
        std::size_t k = i;
        while (k < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[k])))
          ++k;
        detail::require(k > i, "missing exponent in coefficient string");
        exp = std::stoi(text.substr(i, k - i));
        i = k;
      }
      if (e.size() < static_cast<std::size_t>(g) + 1)
        e.resize(static_cast<std::size_t>(g) + 1, 0);
      e[static_cast<std::size_t>(g)] += exp;
      saw_gen = true;
      detail::skip_ws(text, i);
      if (i < text.size() && text[i] == '*') {
        ++i;
        detail::skip_ws(text, i);
      } else {
        break;
      }
    }
    detail::require(saw_number || saw_gen,
                    "cannot parse coefficient: '" + text + "'");
    if (mag != 0) {  // a literal zero term must not leave a stored entry
      Coeff term;
      normalize(e);
      term.terms_[e] = sign * mag;
      result += term;
    }
    sign = 1;
    expect_term = false;
  }
  detail::require(!expect_term, "dangling sign in coefficient: '" + text + "'");
  return result;
}

}  // namespace fgls
