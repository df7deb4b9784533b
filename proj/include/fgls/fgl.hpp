#pragma once

/// @file fgl.hpp
/// @brief One-dimensional commutative formal group laws, exact and truncated.
///
/// A formal group law over a ring R is a series F(u,v) with
///   F(u,0) = u,  F(0,v) = v,  F(u,v) = F(v,u),
///   F(F(u,v),w) = F(u,F(v,w)),
/// together with a formal inverse chi(u) solving F(u, chi(u)) = 0.
///
/// Three theories are supported:
///   - additive:        F = u + v over Z                (chi = -u);
///   - multiplicative:  F = u + v - beta*u*v over Z[beta]
///                      (chi = -u/(1 - beta*u), a genuine infinite series);
///   - universal:       over Q[m_1, ..., m_D] via the formal logarithm
///                      log(u) = u + m_1 u^2 + ... + m_D u^(D+1),
///                      F = exp(log(u) + log(v)).  Adjoining the logarithm
///                      coefficients presents the universal law with
///                      polynomial coefficients; any law over a Q-algebra is
///                      a specialization of the m_k.
///
/// The formal inverse is always computed by the same degree-by-degree solve of
/// F(u, chi(u)) = 0 — one uniform code path for every theory — and the
/// specialized closed forms are verified against it in the tests.

#include "fgls/series.hpp"

#include <map>
#include <memory>

namespace fgls {

enum class Theory { additive, multiplicative, universal };

inline std::string theory_name(Theory t) {
  switch (t) {
    case Theory::additive: return "additive";
    case Theory::multiplicative: return "multiplicative";
    case Theory::universal: return "universal";
  }
  return "?";
}

inline Theory theory_from_name(const std::string& s) {
  if (s == "additive") return Theory::additive;
  if (s == "multiplicative") return Theory::multiplicative;
  if (s == "universal") return Theory::universal;
  detail::fail("unknown theory '" + s +
               "' (expected additive, multiplicative, or universal)");
}

class GroupLaw;

/// A theory plus its coefficient ring.  The ring is fixed once (for the
/// universal theory the generator count D is chosen up front) so that series
/// built at different internal truncation orders remain ring-compatible.
class TheoryContext {
 public:
  static TheoryContext additive() {
    return TheoryContext(Theory::additive, CoeffRing::integers());
  }
  static TheoryContext multiplicative() {
    return TheoryContext(Theory::multiplicative, CoeffRing::with_beta());
  }
  /// Universal law with log coefficients m_1..m_D.  At truncation order d the
  /// law only involves m_k for k <= d-1, so D >= d-1 makes it exact at d.
  static TheoryContext universal(int gen_count) {
    return TheoryContext(Theory::universal, CoeffRing::universal(gen_count));
  }

  Theory theory() const { return theory_; }
  const CoeffRing& ring() const { return ring_; }

  GroupLaw law(int trunc) const;

 private:
  TheoryContext(Theory t, CoeffRing r) : theory_(t), ring_(r) {}
  Theory theory_;
  CoeffRing ring_;
  // Laws at high truncation are costly to build (the universal law's
  // exp/log composition dominates), so each context memoizes them per
  // truncation order.  Copies of a context share the cache.
  std::shared_ptr<std::map<int, std::shared_ptr<const GroupLaw>>> law_cache_ =
      std::make_shared<std::map<int, std::shared_ptr<const GroupLaw>>>();
};

/// A formal group law realized at a fixed truncation order.
class GroupLaw {
 public:
  GroupLaw(Theory theory, const CoeffRing& ring, int trunc)
      : theory_(theory), ring_(ring), trunc_(trunc) {
    detail::require(trunc >= 1, "group law needs truncation order >= 1");
    u_ = var_id("u");
    v_ = var_id("v");
    build();
  }

  Theory theory() const { return theory_; }
  const CoeffRing& ring() const { return ring_; }
  int trunc() const { return trunc_; }
  VarId u() const { return u_; }
  VarId v() const { return v_; }

  /// F(u, v).
  const Series& formal_sum() const { return F_; }
  /// chi(u) with F(u, chi(u)) = 0.
  const Series& formal_inverse() const { return chi_; }
  /// log(u): the isomorphism to the additive law (exact over Q).
  const Series& logarithm() const { return log_; }
  /// exp(t): the compositional inverse of log.
  const Series& exponential() const { return exp_; }

  /// F(a, b) for series with zero constant term (same ring and trunc).
  Series sum(const Series& a, const Series& b) const {
    std::map<VarId, Series> bind;
    bind.emplace(u_, a);
    bind.emplace(v_, b);
    return F_.substitute(bind);
  }

  /// chi(a).
  Series inverse(const Series& a) const { return chi_.substitute(u_, a); }

  /// F(a, chi(b)) — the formal difference.
  Series difference(const Series& a, const Series& b) const {
    return sum(a, inverse(b));
  }

 private:
  void build() {
    const Series u = Series::variable(ring_, trunc_, u_);
    const Series v = Series::variable(ring_, trunc_, v_);
    switch (theory_) {
      case Theory::additive: {
        F_ = u + v;
        log_ = u;
        exp_ = u;
        break;
      }
      case Theory::multiplicative: {
        const Coeff beta = Coeff::generator(ring_, 0);
        F_ = u + v - (u * v) * beta;
        // log(u) = sum_{k>=1} beta^(k-1) u^k / k  ( = -log(1-beta*u)/beta ).
        log_ = Series::zero(ring_, trunc_);
        for (int k = 1; k <= trunc_; ++k) {
          Coeff c(Rational(1) / k);
          if (k > 1) c = c * Coeff::generator(ring_, 0, k - 1);
          log_.add_term(Monomial::variable(u_, k), c);
        }
        exp_ = invert_composition(log_);
        break;
      }
      case Theory::universal: {
        log_ = u;
        for (int k = 1; k <= ring_.gen_count() && k + 1 <= trunc_; ++k) {
          log_.add_term(Monomial::variable(u_, k + 1),
                        Coeff::generator(ring_, k - 1));
        }
        exp_ = invert_composition(log_);
        // F = exp(log(u) + log(v)).
        F_ = exp_.substitute(u_, log_ + log_.substitute(u_, v));
        break;
      }
    }
    chi_ = solve_inverse();
  }

  /// Compositional inverse of L(u) = u + higher order:  E with L(E(u)) = u.
  Series invert_composition(const Series& L) const {
    Series E = Series::variable(ring_, trunc_, u_);
    for (int k = 2; k <= trunc_; ++k) {
      Series comp = L.substitute(u_, E);
      Coeff err = comp.coefficient(Monomial::variable(u_, k));
      if (!err.is_zero()) E.add_term(Monomial::variable(u_, k), -err);
    }
    return E;
  }

  /// Solve F(u, w) = 0 for w = chi(u) degree by degree.  The coefficient of
  /// u^k in F(u, chi(u)) is c_k plus terms involving only c_1..c_{k-1}, since
  /// w enters F linearly at lowest order.
  Series solve_inverse() const {
    Series chi = Series::zero(ring_, trunc_);
    for (int k = 1; k <= trunc_; ++k) {
      Series plugged = F_.substitute(v_, chi);  // chi known below degree k
      Coeff err = plugged.coefficient(Monomial::variable(u_, k));
      if (!err.is_zero()) chi.add_term(Monomial::variable(u_, k), -err);
    }
    return chi;
  }

  Theory theory_;
  CoeffRing ring_;
  int trunc_;
  VarId u_ = 0, v_ = 0;
  Series F_, chi_, log_, exp_;
};

inline GroupLaw TheoryContext::law(int trunc) const {
  auto it = law_cache_->find(trunc);
  if (it == law_cache_->end()) {
    it = law_cache_
             ->emplace(trunc,
                       std::make_shared<const GroupLaw>(theory_, ring_, trunc))
             .first;
  }
  return *it->second;
}

/// Convenience: the standard context for a theory, with the universal ring
/// sized so the law is exact at truncation order d.
inline TheoryContext standard_context(Theory t, int trunc) {
  switch (t) {
    case Theory::additive: return TheoryContext::additive();
    case Theory::multiplicative: return TheoryContext::multiplicative();
    case Theory::universal:
      return TheoryContext::universal(std::max(1, trunc - 1));
  }
  detail::fail("unreachable");
}

}  // namespace fgls
