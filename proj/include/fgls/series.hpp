#pragma once

/// @file series.hpp
/// @brief Exact truncated multivariate power series over a coefficient ring.
///
/// A Series stores every monomial of weighted degree <= trunc with an exact
/// coefficient; degrees above trunc are unknown (not zero).  All arithmetic
/// preserves this contract: a stored coefficient is always the true
/// coefficient of the underlying (possibly infinite) series.
///
/// Binary operations require both operands to share the ring and the
/// truncation order — mixing precisions silently would corrupt exactness, so
/// it is a hard error; use retrunc() to lower one side first.
///
/// Division: the library never divides by arbitrary series.  The two exact
/// division routines it needs are
///   - invert_unit(): reciprocal of a series whose constant term is a nonzero
///     rational (the geometric-series expansion, exact through trunc);
///   - exact_divide_linear(): division by x_i or by x_i - x_j when the
///     division is exact; a nonzero remainder is a hard error that reports
///     the offending remainder.  The quotient's truncation is one less than
///     the input's, and each stored quotient coefficient is exact.

#include "fgls/coeff.hpp"
#include "fgls/monomial.hpp"

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace fgls {

class Series {
 public:
  using TermMap = std::map<Monomial, Coeff, MonomialLess>;

  Series() : ring_(CoeffRing::integers()), trunc_(0) {}

  Series(CoeffRing ring, int trunc) : ring_(ring), trunc_(trunc) {
    detail::require(trunc >= 0, "truncation order must be >= 0");
  }

  static Series zero(const CoeffRing& ring, int trunc) {
    return Series(ring, trunc);
  }

  static Series constant(const CoeffRing& ring, int trunc, Coeff c) {
    Series s(ring, trunc);
    if (!c.is_zero()) s.terms_.emplace(Monomial::unit(), std::move(c));
    return s;
  }

  static Series constant(const CoeffRing& ring, int trunc, const Rational& c) {
    return constant(ring, trunc, Coeff(c));
  }

  static Series variable(const CoeffRing& ring, int trunc, VarId v) {
    Series s(ring, trunc);
    Monomial m = Monomial::variable(v);
    if (m.degree() <= trunc) s.terms_.emplace(std::move(m), Coeff(1));
    return s;
  }

  static Series variable(const CoeffRing& ring, int trunc,
                         const std::string& name, int weight = 1) {
    return variable(ring, trunc, var_id(name, weight));
  }

  static Series from_term(const CoeffRing& ring, int trunc, Monomial m,
                          Coeff c) {
    Series s(ring, trunc);
    if (!c.is_zero() && m.degree() <= trunc)
      s.terms_.emplace(std::move(m), std::move(c));
    return s;
  }

  const CoeffRing& ring() const { return ring_; }
  int trunc() const { return trunc_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Coeff coefficient(const Monomial& m) const {
    detail::require(m.degree() <= trunc_,
                    "coefficient query beyond truncation order");
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff() : it->second;
  }

  /// The coefficient of the degree-0 monomial.
  Coeff constant_term() const {
    auto it = terms_.find(Monomial::unit());
    return it == terms_.end() ? Coeff() : it->second;
  }

  /// Lower the truncation order (drops monomials of degree > new_trunc).
  Series retrunc(int new_trunc) const {
    detail::require(new_trunc >= 0 && new_trunc <= trunc_,
                    "retrunc must lower the truncation order");
    Series r(ring_, new_trunc);
    for (const auto& [m, c] : terms_) {
      if (m.degree() > new_trunc) break;
      r.terms_.emplace(m, c);
    }
    return r;
  }

  Series operator-() const {
    Series r(ring_, trunc_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  Series& operator+=(const Series& o) {
    check_compatible(o, "+");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Series& operator-=(const Series& o) {
    check_compatible(o, "-");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Series operator+(const Series& o) const {
    Series r = *this;
    return r += o;
  }
  Series operator-(const Series& o) const {
    Series r = *this;
    return r -= o;
  }

  Series operator*(const Series& o) const {
    check_compatible(o, "*");
    Series r(ring_, trunc_);
    for (const auto& [ma, ca] : terms_) {
      if (ma.degree() > trunc_) break;
      for (const auto& [mb, cb] : o.terms_) {
        if (ma.degree() + mb.degree() > trunc_) break;  // sorted by degree
        r.add_term(ma * mb, ca * cb);
      }
    }
    return r;
  }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  Series operator*(const Coeff& c) const {
    Series r(ring_, trunc_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) {
      Coeff p = v * c;
      if (!p.is_zero()) r.terms_.emplace(m, std::move(p));
    }
    return r;
  }
  Series operator*(const Rational& c) const { return *this * Coeff(c); }

  Series pow(int k) const {
    detail::require(k >= 0, "pow: negative exponent");
    Series r = constant(ring_, trunc_, Rational(1));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  bool operator==(const Series& o) const {
    return ring_ == o.ring_ && trunc_ == o.trunc_ && terms_ == o.terms_;
  }
  bool operator!=(const Series& o) const { return !(*this == o); }

  // -- degree bookkeeping ---------------------------------------------------

  /// Least weighted monomial degree present, or nullopt for the zero series.
  std::optional<int> min_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.degree();
  }

  /// Greatest weighted monomial degree present, or nullopt if zero.
  std::optional<int> max_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.degree();
  }

  /// Combined degree of a term: monomial weighted degree plus the (negative)
  /// graded degree of its coefficient.  If every term has the same combined
  /// degree, return it; the zero series is homogeneous of every degree.
  std::optional<int> homogeneous_degree() const {
    std::optional<int> deg;
    for (const auto& [m, c] : terms_) {
      int cd = 0;
      if (!c.homogeneous_degree(ring_, &cd)) return std::nullopt;
      int total = m.degree() + cd;
      if (!deg) {
        deg = total;
      } else if (*deg != total) {
        return std::nullopt;
      }
    }
    return deg;
  }

  /// True iff every rational appearing in every coefficient is an integer.
  bool is_integral() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second.is_integral(); });
  }

  /// List of distinct variables that occur.
  std::vector<VarId> support() const {
    std::vector<VarId> vs;
    for (const auto& [m, c] : terms_) {
      (void)c;
      for (const auto& f : m.factors()) {
        if (std::find(vs.begin(), vs.end(), f.first) == vs.end())
          vs.push_back(f.first);
      }
    }
    const VarTable& vt = VarTable::instance();
    std::sort(vs.begin(), vs.end(),
              [&](VarId a, VarId b) { return vt.less(a, b); });
    return vs;
  }

  // -- substitution ----------------------------------------------------------

  /// Simultaneous substitution v -> bindings[v] for every bound variable;
  /// unbound variables are left alone.  Every binding must share the ring and
  /// truncation order of *this and must have ZERO constant term (substituting
  /// a unit into a truncated series is not well defined degree by degree).
  Series substitute(const std::map<VarId, Series>& bindings) const {
    if (bindings.empty()) return *this;
    for (const auto& [v, s] : bindings) {
      (void)v;
      detail::require(s.ring_ == ring_ && s.trunc_ == trunc_,
                      "substitute: binding ring/trunc mismatch");
      detail::require(s.constant_term().is_zero(),
                      "substitute: binding for '" +
                          VarTable::instance().name(v) +
                          "' has a nonzero constant term");
    }
    // Fast path: every binding is exactly (+1) * single variable of the same
    // weight — a variable renaming, e.g. the transposition sigma_i.
    bool rename = true;
    std::map<VarId, VarId> rename_map;
    for (const auto& [v, s] : bindings) {
      if (s.terms_.size() == 1) {
        const auto& [m, c] = *s.terms_.begin();
        if (m.factors().size() == 1 && m.factors()[0].second == 1 &&
            c.is_constant() && c.constant_value() == 1 &&
            VarTable::instance().weight(m.factors()[0].first) ==
                VarTable::instance().weight(v)) {
          rename_map[v] = m.factors()[0].first;
          continue;
        }
      }
      rename = false;
      break;
    }
    if (rename) {
      Series r(ring_, trunc_);
      for (const auto& [m, c] : terms_) {
        std::vector<Monomial::Factor> fs = m.factors();
        for (auto& f : fs) {
          auto it = rename_map.find(f.first);
          if (it != rename_map.end()) f.first = it->second;
        }
        r.add_term(Monomial::from_factors(std::move(fs)), c);
      }
      return r;
    }
    // General path, with per-variable power caching.
    std::map<VarId, std::vector<Series>> powers;  // powers[v][k] = v-image^k
    auto power = [&](VarId v, int k) -> const Series& {
      auto& vec = powers[v];
      if (vec.empty()) {
        auto it = bindings.find(v);
        vec.push_back(constant(ring_, trunc_, Rational(1)));
        vec.push_back(it != bindings.end() ? it->second
                                           : variable(ring_, trunc_, v));
      }
      while (static_cast<int>(vec.size()) <= k) {
        vec.push_back(vec.back() * vec[1]);
      }
      return vec[static_cast<std::size_t>(k)];
    };
    Series r(ring_, trunc_);
    for (const auto& [m, c] : terms_) {
      Series t = constant(ring_, trunc_, Rational(1));
      bool dead = false;
      for (const auto& f : m.factors()) {
        t = t * power(f.first, f.second);
        if (t.is_zero()) {
          dead = true;
          break;
        }
      }
      if (!dead) r += t * c;
    }
    return r;
  }

  Series substitute(VarId v, const Series& image) const {
    std::map<VarId, Series> b;
    b.emplace(v, image);
    return substitute(b);
  }

  // -- exact division ---------------------------------------------------------

  /// Reciprocal of a series whose constant term is a nonzero rational.
  /// Exact through trunc: 1/f = (1/c0) * sum_k h^k with h = 1 - f/c0.
  Series invert_unit() const {
    Coeff c0 = constant_term();
    detail::require(c0.is_constant() && !c0.is_zero(),
                    "invert_unit: constant term '" + c0.str(ring_) +
                        "' is not a nonzero rational — series is not a unit");
    Rational c = c0.constant_value();
    Series h = constant(ring_, trunc_, Rational(1)) - *this * (Rational(1) / c);
    // h has zero constant term, so h^k only contributes to degrees >= k.
    Series acc = constant(ring_, trunc_, Rational(1));
    for (int k = 0; k < trunc_; ++k) {
      acc = constant(ring_, trunc_, Rational(1)) + h * acc;
    }
    return acc * (Rational(1) / c);
  }

  /// Exact division by (x_i - x_j), or by x_i alone when xj is nullopt.
  /// The quotient is returned truncated at trunc-1, with every stored
  /// coefficient exact.  A nonzero remainder raises DivisionError.
  Series exact_divide_linear(VarId xi, std::optional<VarId> xj = std::nullopt) const {
    detail::require(VarTable::instance().weight(xi) == 1 &&
                        (!xj || VarTable::instance().weight(*xj) == 1),
                    "exact_divide_linear: divisor variables must have weight 1");
    detail::require(trunc_ >= 1,
                    "exact_divide_linear: needs truncation order >= 1");
    detail::require(!xj || *xj != xi,
                    "exact_divide_linear: divisor variables must differ");
    // Split f = sum_k x_i^k f_k with f_k free of x_i.
    std::map<int, Series> fk;
    int K = 0;
    for (const auto& [m, c] : terms_) {
      int k = m.exponent(xi);
      K = std::max(K, k);
      auto it = fk.try_emplace(k, Series(ring_, trunc_)).first;
      it->second.add_term(m.divided_by(xi, k), c);
    }
    auto piece = [&](int k) -> Series {
      auto it = fk.find(k);
      return it == fk.end() ? Series(ring_, trunc_) : it->second;
    };
    // Synthetic division: f = (x_i - c) q + r with c = x_j (or 0).
    //   q_{K-1} = f_K;  q_{k-1} = f_k + c q_k;  r = f_0 + c q_0.
    Series q(ring_, trunc_ - 1);
    Series r(ring_, trunc_);
    if (K == 0) {
      r = piece(0);
    } else {
      std::map<int, Series> qk;
      qk[K - 1] = piece(K);
      for (int k = K - 1; k >= 1; --k) {
        Series next = piece(k);
        if (xj) next += qk[k] * variable(ring_, trunc_, *xj);
        qk[k - 1] = std::move(next);
      }
      r = piece(0);
      if (xj) r += qk[0] * variable(ring_, trunc_, *xj);
      for (const auto& [k, s] : qk) {
        if (s.is_zero()) continue;
        Monomial xik = Monomial::variable(xi, std::max(k, 1));
        for (const auto& [m, c] : s.terms_) {
          Monomial prod = (k == 0) ? m : m * xik;
          if (prod.degree() <= q.trunc_) q.add_term(prod, c);
        }
      }
    }
    if (!r.is_zero()) {
      std::string divisor = VarTable::instance().name(xi);
      if (xj) divisor += " - " + VarTable::instance().name(*xj);
      throw DivisionError("exact_divide_linear: division by (" + divisor +
                          ") leaves remainder " + r.str());
    }
    return q;
  }

  // -- rendering ---------------------------------------------------------------

  /// Deterministic plain-text form, e.g. "-x1 + y1 + (1 - beta)*x1*y1".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string mono = mono_str(m);
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
          out += rational_to_string(mag);
        } else if (mag == 1) {
          out += mono;
        } else {
          out += rational_to_string(mag) + "*" + mono;
        }
      } else {
        if (!first) out += " + ";
        out += "(" + c.str(ring_) + ")";
        if (!m.is_unit()) out += "*" + mono;
      }
      first = false;
    }
    return out;
  }

  static std::string mono_str(const Monomial& m) {
    if (m.is_unit()) return "1";
    std::string out;
    for (const auto& [v, e] : m.factors()) {
      if (!out.empty()) out += "*";
      out += VarTable::instance().name(v);
      if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
  }

  /// Insert (add) a single term, dropping it if beyond trunc or zero.
  void add_term(const Monomial& m, const Coeff& c) {
    if (c.is_zero() || m.degree() > trunc_) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

 private:
  void check_compatible(const Series& o, const char* op) const {
    detail::require(ring_ == o.ring_,
                    std::string("series ") + op + ": ring mismatch (" +
                        ring_.name() + " vs " + o.ring_.name() + ")");
    detail::require(trunc_ == o.trunc_,
                    std::string("series ") + op +
                        ": truncation order mismatch (" +
                        std::to_string(trunc_) + " vs " +
                        std::to_string(o.trunc_) + ")");
  }

  CoeffRing ring_;
  int trunc_;
  TermMap terms_;
};

inline Series operator*(const Coeff& c, const Series& s) { return s * c; }
inline Series operator*(const Rational& c, const Series& s) { return s * c; }

/// Product of two series at an explicitly requested truncation order, which
/// may exceed either factor's own order.  This is exact precisely when each
/// factor carries every term that can meet the other factor's lowest term
/// within the requested order, i.e. when
///   trunc <= min_degree(a) + b.trunc()  and  trunc <= min_degree(b) + a.trunc();
/// anything less is a hard error.  Useful when multiplying series whose known
/// windows sit far above degree zero: each factor can be computed at its own
/// cheap order instead of the full product order.
inline Series truncated_product(const Series& a, const Series& b, int trunc) {
  if (!(a.ring() == b.ring()))
    throw Error("truncated_product: coefficient ring mismatch");
  if (a.is_zero() || b.is_zero()) return Series::zero(a.ring(), trunc);
  int amin = *a.min_degree();
  int bmin = *b.min_degree();
  if (amin + b.trunc() < trunc || bmin + a.trunc() < trunc)
    throw Error(
        "truncated_product: factors are not known to high enough order for "
        "the requested truncation " +
        std::to_string(trunc));
  Series r = Series::zero(a.ring(), trunc);
  for (const auto& [ma, ca] : a.terms()) {
    if (ma.degree() + bmin > trunc) break;  // terms sorted by degree
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.degree() + mb.degree() > trunc) break;
      r.add_term(ma * mb, ca * cb);
    }
  }
  return r;
}

/// Apply fn to every coefficient, producing a series over target_ring.
inline Series map_coefficients(const CoeffRing& target_ring, const Series& f,
                               const std::function<Coeff(const Coeff&)>& fn) {
  Series r(target_ring, f.trunc());
  for (const auto& [m, c] : f.terms()) r.add_term(m, fn(c));
  return r;
}

/// Specialize beta to a rational value, landing in Z (integral value) or Q.
inline Series specialize_beta(const Series& f, const Rational& value) {
  detail::require(f.ring().kind() == RingKind::beta,
                  "specialize_beta: series ring has no beta generator");
  CoeffRing target =
      is_integer(value) ? CoeffRing::integers() : CoeffRing::rationals();
  return map_coefficients(target, f, [&](const Coeff& c) {
    Rational total = 0;
    for (const auto& [e, v] : c.terms()) {
      Rational p = 1;
      int k = e.empty() ? 0 : e[0];
      for (int i = 0; i < k; ++i) p *= value;
      total += v * p;
    }
    return Coeff(total);
  });
}

}  // namespace fgls
