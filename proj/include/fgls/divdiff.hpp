#pragma once

// Generalized divided-difference operators attached to the simple
// reflections of the symmetric and hyperoctahedral groups, for an arbitrary
// one-dimensional formal group law.
//
// The operators act on truncated series in x_1..x_n (other variables ride
// along as inert parameters).  For i >= 1,
//
//   A_i(f) = (1 + sigma_i) [ f / D_i ],   D_i = -F(x_{i+1}, chi(x_i)),
//
// where sigma_i exchanges x_i and x_{i+1}.  D_i vanishes on x_i = x_{i+1}
// and has linear part x_i - x_{i+1}, so D_i = (x_i - x_{i+1}) * mu with mu a
// unit of constant term 1; the whole computation reduces to unit inversion
// and one exact linear division of the antisymmetrized numerator.  For the
// exceptional index,
//
//   A_0(f) = (1 + sigma_0) [ f / D_0 ],   D_0 = -F(x_1, x_1),
//
// where sigma_0 substitutes x_1 -> chi(x_1), so the second fraction is
// sigma_0(f) / (-F(chi(x_1), chi(x_1))).  Both denominators factor as x_1
// times a unit (of constant terms -2 and 2); the two fractions are combined
// over the common factor x_1 and exact-divided.  The intermediate unit
// inverses involve 1/2, so computations transit through rationals even for
// integral coefficient rings; the halves cancel in the sum.  This D_0 is
// the unique choice (up to nothing) for which the multiplicative-law
// operators satisfy the full hyperoctahedral braid relations, including
// (0,1,0,1) = (1,0,1,0); it degenerates over the additive law to the
// classical (sigma_0(f) - f) / (2 x_1).
//
// Every application consumes one degree of truncation headroom: the result
// of a single operator has truncation f.trunc() - 1, and a word of length l
// costs l degrees.  Callers that need exact low-degree output simply build
// their inputs with l extra degrees of headroom.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "fgls/fgl.hpp"
#include "fgls/series.hpp"
#include "fgls/variables.hpp"

namespace fgls {

namespace detail {

inline VarId xvar(int i) { return indexed_var("x", i); }

/// F(a, b) evaluated at the (common) truncation of a and b, which may be
/// lower than the law's own truncation.
inline Series law_sum_at(const GroupLaw& law, const Series& a,
                         const Series& b) {
  require(a.trunc() == b.trunc(), "law_sum_at: mismatched truncations");
  require(law.trunc() >= a.trunc(), "law_sum_at: law truncation too small");
  std::map<VarId, Series> bind;
  bind[law.u()] = a;
  bind[law.v()] = b;
  return law.formal_sum().retrunc(a.trunc()).substitute(bind);
}

/// chi(a) at the truncation of a.
inline Series law_inverse_at(const GroupLaw& law, const Series& a) {
  require(law.trunc() >= a.trunc(), "law_inverse_at: law truncation too small");
  return law.formal_inverse().retrunc(a.trunc()).substitute(law.u(), a);
}

}  // namespace detail

/// The reflection action on series: sigma_i (i >= 1) exchanges x_i and
/// x_{i+1}; sigma_0 substitutes x_1 -> chi(x_1).  The law is consulted only
/// for i == 0 and must have truncation >= f.trunc().
inline Series sigma(const GroupLaw& law, int i, const Series& f) {
  detail::require(i >= 0, "sigma: index must be >= 0");
  if (i == 0) {
    Series x1 = Series::variable(f.ring(), f.trunc(), detail::xvar(1));
    return f.substitute(detail::xvar(1), detail::law_inverse_at(law, x1));
  }
  std::map<VarId, Series> bind;
  bind[detail::xvar(i)] =
      Series::variable(f.ring(), f.trunc(), detail::xvar(i + 1));
  bind[detail::xvar(i + 1)] =
      Series::variable(f.ring(), f.trunc(), detail::xvar(i));
  return f.substitute(bind);
}

/// The divided-difference operator A_i for the law.  Requires one degree of
/// law headroom: law.trunc() >= f.trunc() + 1.  The result has truncation
/// f.trunc() - 1.
inline Series apply(const GroupLaw& law, int i, const Series& f) {
  detail::require(i >= 0, "divided difference: index must be >= 0");
  detail::require(f.ring() == law.ring(),
                  "divided difference: series/law coefficient ring mismatch");
  const int t = f.trunc();
  detail::require(t >= 1, "divided difference: truncation must be >= 1");
  detail::require(law.trunc() >= t + 1,
                  "divided difference: law needs one degree of headroom");
  if (i == 0) {
    const VarId x1 = detail::xvar(1);
    Series x1h = Series::variable(f.ring(), t + 1, x1);
    Series chi1 = detail::law_inverse_at(law, x1h);
    // -F(x_1, x_1) = x_1 * U and -F(chi(x_1), chi(x_1)) = x_1 * V with U, V
    // units of constant terms -2 and 2.
    Series u_neg = (detail::law_sum_at(law, x1h, x1h) * Rational(-1))
                       .exact_divide_linear(x1);
    Series u_pos = (detail::law_sum_at(law, chi1, chi1) * Rational(-1))
                       .exact_divide_linear(x1);
    Series f0 = f.substitute(x1, chi1.retrunc(t));
    Series bracket = f * u_neg.invert_unit() + f0 * u_pos.invert_unit();
    // The bracket vanishes at x_1 = 0 because sigma_0 fixes that locus and
    // the two inverted unit constants sum to zero.
    return bracket.exact_divide_linear(x1);
  }
  const VarId xi = detail::xvar(i);
  const VarId xj = detail::xvar(i + 1);
  Series xih = Series::variable(f.ring(), t + 1, xi);
  Series xjh = Series::variable(f.ring(), t + 1, xj);
  Series denom =
      detail::law_sum_at(law, xjh, detail::law_inverse_at(law, xih)) *
      Rational(-1);
  Series mu = denom.exact_divide_linear(xi, xj);  // unit, constant term 1
  Series g = f * mu.invert_unit();
  return (g - sigma(law, i, g)).exact_divide_linear(xi, xj);
}

/// A_I = A_{i_l} o ... o A_{i_1}: the first letter of the word acts first.
/// Consumes word.size() degrees of truncation.
inline Series apply_word(const GroupLaw& law, const std::vector<int>& word,
                         const Series& f) {
  Series g = f;
  for (int i : word) g = apply(law, i, g);
  return g;
}

/// Convenience overloads that build a law with exactly the headroom needed.
inline Series apply(const TheoryContext& ctx, int i, const Series& f) {
  return apply(ctx.law(f.trunc() + 1), i, f);
}
inline Series apply_word(const TheoryContext& ctx, const std::vector<int>& word,
                         const Series& f) {
  if (word.empty()) return f;
  return apply_word(ctx.law(f.trunc() + 1), word, f);
}

/// Closed-form operators for the multiplicative law over Z[beta]
/// (connective K-theory).  Independent code path from apply():
///
///   phi_i(P) = [ (1 - beta x_i) P - (1 - beta x_{i+1}) sigma_i(P) ]
///              / (x_i - x_{i+1}),              i >= 1,
///   phi_0(P) = [ (1 - beta x_1)^2 P(-x_1/(1-beta x_1), x_2, ...) - P ]
///              / (2 x_1 - beta x_1^2).
///
/// Same truncation contract as apply(): the result drops one degree.
inline Series apply_ck(int i, const Series& f) {
  detail::require(i >= 0, "divided difference: index must be >= 0");
  detail::require(f.ring().kind() == RingKind::beta,
                  "apply_ck: series must live over the beta ring");
  const int t = f.trunc();
  detail::require(t >= 1, "divided difference: truncation must be >= 1");
  const CoeffRing& R = f.ring();
  const Coeff beta = Coeff::generator(R, 0, 1);
  if (i == 0) {
    const VarId x1 = detail::xvar(1);
    Series x1s = Series::variable(R, t, x1);
    Series one_minus = Series::constant(R, t, 1) - x1s * beta;
    // chi(x_1) = -x_1 / (1 - beta x_1)
    Series chi1 = x1s * Rational(-1) * one_minus.invert_unit();
    Series num = f.substitute(x1, chi1) * one_minus * one_minus - f;
    // 2 x_1 - beta x_1^2 = x_1 * (2 - beta x_1)
    Series unit = Series::constant(R, t, 2) - x1s * beta;
    return (num * unit.invert_unit()).exact_divide_linear(x1);
  }
  const VarId xi = detail::xvar(i);
  const VarId xj = detail::xvar(i + 1);
  Series xis = Series::variable(R, t, xi);
  Series xjs = Series::variable(R, t, xj);
  std::map<VarId, Series> swap_bind;
  swap_bind[xi] = xjs;
  swap_bind[xj] = xis;
  Series num = f * (Series::constant(R, t, 1) - xis * beta) -
               f.substitute(swap_bind) *
                   (Series::constant(R, t, 1) - xjs * beta);
  return num.exact_divide_linear(xi, xj);
}

inline Series apply_word_ck(const std::vector<int>& word, const Series& f) {
  Series g = f;
  for (int i : word) g = apply_ck(i, g);
  return g;
}

/// One braid pair of generator words together with the check outcome.
struct BraidPair {
  std::vector<int> left;
  std::vector<int> right;
  bool holds = true;
  /// When !holds: the first monomial (by degree, then lex) on which the two
  /// compositions differ, and the nonzero difference series.
  std::string witness;
  std::string difference;
};

struct BraidReport {
  bool all_hold = true;
  std::vector<BraidPair> pairs;
};

namespace detail {

inline void enumerate_monomials(int nvars, int max_deg,
                                std::vector<std::vector<int>>& out) {
  std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
  // Lexicographic enumeration of exponent vectors with bounded total degree.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == nvars) {
      out.push_back(exps);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      exps[static_cast<std::size_t>(pos)] = e;
      self(self, pos + 1, remaining - e);
    }
    exps[static_cast<std::size_t>(pos)] = 0;
  };
  rec(rec, 0, max_deg);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    return a < b;
  });
}

}  // namespace detail

/// Check every braid relation of the rank-n group (type C includes the
/// generator 0; type A starts at 1) by applying both sides to all monomials
/// in x_1..x_n of total degree <= degree_bound.  Reports, per pair, whether
/// the relation holds, with a concrete witness when it does not.
inline BraidReport braid_report(const TheoryContext& ctx, bool type_c, int n,
                                int degree_bound) {
  detail::require(n >= (type_c ? 2 : 3),
                  "braid_report: rank too small to have braid pairs");
  detail::require(degree_bound >= 0, "braid_report: negative degree bound");
  const int lo = type_c ? 0 : 1;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> word_pairs;
  for (int a = lo; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (b - a >= 2) {
        word_pairs.push_back({{a, b}, {b, a}});
      } else if (a == 0) {
        word_pairs.push_back({{0, 1, 0, 1}, {1, 0, 1, 0}});
      } else {
        word_pairs.push_back({{a, b, a}, {b, a, b}});
      }
    }
  }
  std::vector<std::vector<int>> monomials;
  detail::enumerate_monomials(n, degree_bound, monomials);

  BraidReport report;
  for (const auto& [left, right] : word_pairs) {
    BraidPair pair;
    pair.left = left;
    pair.right = right;
    const int len = static_cast<int>(left.size());
    const int work = degree_bound + len;
    GroupLaw law = ctx.law(work + 1);
    for (const auto& exps : monomials) {
      Monomial m = Monomial::unit();
      for (int v = 1; v <= n; ++v) {
        int e = exps[static_cast<std::size_t>(v - 1)];
        if (e > 0) m = m * Monomial::variable(detail::xvar(v), e);
      }
      Series f = Series::from_term(ctx.ring(), work, m, Coeff(1));
      Series diff = apply_word(law, left, f) - apply_word(law, right, f);
      if (!diff.is_zero()) {
        pair.holds = false;
        pair.witness = f.str();
        pair.difference = diff.str();
        report.all_hold = false;
        break;
      }
    }
    report.pairs.push_back(std::move(pair));
  }
  return report;
}

}  // namespace fgls
