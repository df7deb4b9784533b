#pragma once

/// @file classes.hpp
/// @brief Fundamental classes of full and symplectic flag bundles.
///
/// Computes, as exact truncated series in two alphabets x_1..x_n, y_1..y_n:
///   - flag-subbundle class products (type A and type C),
///   - Bott-Samelson classes: a word-indexed chain of divided-difference
///     operators applied to the smallest-cell class,
///   - Schubert classes over connective K-theory (beta coefficients), with
///     specializations beta = 0 (Chow) and beta = -1 (K-theory),
///   - embedded Schubert classes: a lower-rank class times the connecting
///     product of formal sums.
///
/// Variable conventions: x_i is the first Chern root of the i-th tautological
/// quotient line (numbered from the top of the flag), y_j the j-th root of
/// the fixed reference flag.  Flag-subbundle products carry the y-alphabet
/// through the formal inverse (factors F(x_i, chi(y_j))); Bott-Samelson and
/// Schubert classes use the plain y-alphabet, and the geometric y_j -> chi(y_j)
/// substitution is exposed separately (substitute_geometric / invert_y_alphabet).
///
/// All products are assembled with degree-aware pruning: while multiplying a
/// list of constant-term-free factors at truncation order d, partial-product
/// terms that cannot reach total degree <= d once every remaining factor has
/// contributed its minimal degree are dropped early.  The result is exactly
/// the truncation of the full product; the pruning only avoids transient
/// intermediate blow-up at high rank.

#include "fgls/divdiff.hpp"
#include "fgls/fgl.hpp"
#include "fgls/series.hpp"
#include "fgls/weyl.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fgls {

enum class FlagType { A, C };

inline std::string flag_type_name(FlagType t) {
  return t == FlagType::A ? "A" : "C";
}

/// Default truncation order for rank-n computations: the degree of the top
/// class (n(n-1)/2 in type A, n^2 in type C) plus headroom n.
inline int default_trunc(FlagType t, int n) {
  return t == FlagType::A ? n * (n - 1) / 2 + n : n * n + n;
}

/// What a computed class is a class *of*.
struct ClassLabel {
  enum class Kind { flag_subbundle, bott_samelson, schubert };
  Kind kind;
  int m = -1;               ///< flag_subbundle: the subbundle rank
  std::vector<int> word;    ///< bott_samelson: the operator word
  std::vector<int> window;  ///< schubert: window of the (signed) permutation

  static ClassLabel subbundle(int m) {
    ClassLabel l;
    l.kind = Kind::flag_subbundle;
    l.m = m;
    return l;
  }
  static ClassLabel samelson_word(std::vector<int> w) {
    ClassLabel l;
    l.kind = Kind::bott_samelson;
    l.word = std::move(w);
    return l;
  }
  static ClassLabel schubert(const SignedPerm& w) {
    ClassLabel l;
    l.kind = Kind::schubert;
    l.window = w.window();
    return l;
  }
};

/// A computed class: the theory it lives in, its flag type and rank, what it
/// labels, and its value as a truncated series.  `beta` records the
/// specialization state for beta-ring classes ("sym", "0" or "-1"; empty for
/// other coefficient rings).
struct ClassExpression {
  Theory theory;
  FlagType type;
  int n = 0;
  ClassLabel label;
  std::string beta;
  Series value;
};

namespace detail {

inline VarId yvar(int j) { return indexed_var("y", j); }

/// Drop terms of degree > max_deg, keeping the truncation label.  Only used
/// inside pruned products, where the dropped terms provably cannot influence
/// any retained coefficient of the final result.
inline Series prune_above(const Series& s, int max_deg) {
  if (max_deg >= s.trunc()) return s;
  Series out = Series::zero(s.ring(), s.trunc());
  if (max_deg < 0) return out;
  for (const auto& [m, c] : s.terms()) {
    if (m.degree() > max_deg) break;  // terms are degree-sorted
    out.add_term(m, c);
  }
  return out;
}

/// Exact truncated product of factors, each with zero constant term.
inline Series pruned_product(const CoeffRing& ring, int trunc,
                             const std::vector<Series>& factors) {
  std::vector<int> mins(factors.size());
  for (std::size_t k = 0; k < factors.size(); ++k) {
    require(factors[k].ring() == ring && factors[k].trunc() == trunc,
            "pruned_product: factor ring/truncation mismatch");
    auto md = factors[k].min_degree();
    if (!md.has_value()) return Series::zero(ring, trunc);  // zero factor
    require(*md >= 1, "pruned_product: factor has a constant term");
    mins[k] = *md;
  }
  // tail[k] = minimal total degree still to come from factors k..end.
  std::vector<int> tail(factors.size() + 1, 0);
  for (std::size_t k = factors.size(); k-- > 0;) tail[k] = tail[k + 1] + mins[k];

  Series acc = Series::constant(ring, trunc, Rational(1));
  int head = 0;  // minimal degree already accumulated
  for (std::size_t k = 0; k < factors.size(); ++k) {
    acc = prune_above(acc, trunc - tail[k]);
    Series f = prune_above(factors[k], trunc - tail[k + 1] - head);
    acc = acc * f;
    if (acc.is_zero()) return acc;
    head += mins[k];
  }
  return acc;
}

/// F(x_i, chi(y_j)) at truncation `trunc` (law must be built at >= trunc).
inline Series pair_factor_x_chiy(const GroupLaw& law, int i, int j, int trunc) {
  Series xi = Series::variable(law.ring(), trunc, xvar(i));
  Series cy = law_inverse_at(law, Series::variable(law.ring(), trunc, yvar(j)));
  return law_sum_at(law, xi, cy);
}

/// F(chi(x_i), chi(y_j)).
inline Series pair_factor_chix_chiy(const GroupLaw& law, int i, int j,
                                    int trunc) {
  Series cx = law_inverse_at(law, Series::variable(law.ring(), trunc, xvar(i)));
  Series cy = law_inverse_at(law, Series::variable(law.ring(), trunc, yvar(j)));
  return law_sum_at(law, cx, cy);
}

/// F(x_i, y_j).
inline Series pair_factor_x_y(const GroupLaw& law, int i, int j, int trunc) {
  Series xi = Series::variable(law.ring(), trunc, xvar(i));
  Series yj = Series::variable(law.ring(), trunc, yvar(j));
  return law_sum_at(law, xi, yj);
}

/// F(chi(x_i), y_j).
inline Series pair_factor_chix_y(const GroupLaw& law, int i, int j, int trunc) {
  Series cx = law_inverse_at(law, Series::variable(law.ring(), trunc, xvar(i)));
  Series yj = Series::variable(law.ring(), trunc, yvar(j));
  return law_sum_at(law, cx, yj);
}

inline std::string beta_state(const CoeffRing& ring) {
  return ring.kind() == RingKind::beta ? "sym" : "";
}

}  // namespace detail

/// Type A flag-subbundle class: prod F(x_i, chi(y_j)) over
/// {(i,j) : i + j <= n, 1 <= j <= n-m}.  m = n gives the empty product 1.
inline ClassExpression flag_class_A(const TheoryContext& ctx, int n, int m,
                                    int trunc = -1) {
  detail::require(n >= 1, "flag_class_A: rank must be >= 1");
  detail::require(1 <= m && m <= n, "flag_class_A: need 1 <= m <= n");
  int t = trunc < 0 ? default_trunc(FlagType::A, n) : trunc;
  GroupLaw law = ctx.law(t >= 1 ? t : 1);
  std::vector<Series> factors;
  for (int j = 1; j <= n - m; ++j)
    for (int i = 1; i + j <= n; ++i)
      factors.push_back(detail::pair_factor_x_chiy(law, i, j, t));
  ClassExpression cls;
  cls.theory = ctx.theory();
  cls.type = FlagType::A;
  cls.n = n;
  cls.label = ClassLabel::subbundle(m);
  cls.beta = detail::beta_state(ctx.ring());
  cls.value = detail::pruned_product(ctx.ring(), t, factors);
  return cls;
}

/// Type C flag-subbundle class:
///   prod_{i+j<=n, 1<=j<=n-m} F(x_i, chi(y_j))
/// * prod_{i+j<=n+1, 1<=j<=n-m} F(chi(x_i), chi(y_j)).
/// m ranges over 0..n (m = 0 is the smallest cell; m = n gives 1).
inline ClassExpression flag_class_C(const TheoryContext& ctx, int n, int m,
                                    int trunc = -1) {
  detail::require(n >= 0, "flag_class_C: rank must be >= 0");
  detail::require(0 <= m && m <= n, "flag_class_C: need 0 <= m <= n");
  int t = trunc < 0 ? default_trunc(FlagType::C, n) : trunc;
  GroupLaw law = ctx.law(t >= 1 ? t : 1);
  std::vector<Series> factors;
  for (int j = 1; j <= n - m; ++j) {
    for (int i = 1; i + j <= n; ++i)
      factors.push_back(detail::pair_factor_x_chiy(law, i, j, t));
    for (int i = 1; i + j <= n + 1; ++i)
      factors.push_back(detail::pair_factor_chix_chiy(law, i, j, t));
  }
  ClassExpression cls;
  cls.theory = ctx.theory();
  cls.type = FlagType::C;
  cls.n = n;
  cls.label = ClassLabel::subbundle(m);
  cls.beta = detail::beta_state(ctx.ring());
  cls.value = detail::pruned_product(ctx.ring(), t, factors);
  return cls;
}

/// Type A one-step push-forward factor: prod_{i=1}^{m} F(x_i, chi(y_{n-m})),
/// the multiplier relating the level-(m+1) class to the level-m class.
inline Series step_product_A(const TheoryContext& ctx, int n, int m,
                             int trunc = -1) {
  detail::require(1 <= m && m < n, "step_product_A: need 1 <= m < n");
  int t = trunc < 0 ? default_trunc(FlagType::A, n) : trunc;
  GroupLaw law = ctx.law(t >= 1 ? t : 1);
  std::vector<Series> factors;
  for (int i = 1; i <= m; ++i)
    factors.push_back(detail::pair_factor_x_chiy(law, i, n - m, t));
  return detail::pruned_product(ctx.ring(), t, factors);
}

/// Type C one-step push-forward factor:
///   prod_{i=1}^{m} F(x_i, chi(y_{n-m})) * prod_{i=1}^{m+1} F(chi(x_i), chi(y_{n-m})).
inline Series step_product_C(const TheoryContext& ctx, int n, int m,
                             int trunc = -1) {
  detail::require(0 <= m && m < n, "step_product_C: need 0 <= m < n");
  int t = trunc < 0 ? default_trunc(FlagType::C, n) : trunc;
  GroupLaw law = ctx.law(t >= 1 ? t : 1);
  std::vector<Series> factors;
  for (int i = 1; i <= m; ++i)
    factors.push_back(detail::pair_factor_x_chiy(law, i, n - m, t));
  for (int i = 1; i <= m + 1; ++i)
    factors.push_back(detail::pair_factor_chix_chiy(law, i, n - m, t));
  return detail::pruned_product(ctx.ring(), t, factors);
}

/// Push-forward action on a class of the flag subbundle of rank m: multiply a
/// polynomial P in x_1..x_m (y's allowed) by the subbundle class.  P must not
/// mention x_k with k > m.
inline Series pushforward_multiply(const Series& P, const ClassExpression& cls) {
  detail::require(cls.label.kind == ClassLabel::Kind::flag_subbundle,
                  "pushforward_multiply: class is not a flag-subbundle class");
  detail::require(P.ring() == cls.value.ring(),
                  "pushforward_multiply: coefficient ring mismatch");
  const VarTable& table = VarTable::instance();
  for (VarId v : P.support()) {
    const VarInfo& info = table.info(v);
    detail::require(info.stem != "x" || info.index <= cls.label.m,
                    "pushforward_multiply: input mentions x" +
                        std::to_string(info.index) +
                        " beyond the subbundle rank m=" +
                        std::to_string(cls.label.m));
  }
  int t = std::min(P.trunc(), cls.value.trunc());
  return P.retrunc(t) * cls.value.retrunc(t);
}

/// The smallest-cell class the operator chains start from:
///   prod_{i+j<=n} F(x_i, y_j) * prod_{i+j<=n+1} F(chi(x_i), y_j)
/// (plain y-alphabet; the geometric y -> chi(y) substitution is separate).
inline Series samelson_base(const GroupLaw& law, int n, int trunc) {
  std::vector<Series> factors;
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i + j <= n; ++i)
      factors.push_back(detail::pair_factor_x_y(law, i, j, trunc));
    for (int i = 1; i + j <= n + 1; ++i)
      factors.push_back(detail::pair_factor_chix_y(law, i, j, trunc));
  }
  return detail::pruned_product(law.ring(), trunc, factors);
}

/// Bott-Samelson class: the word-indexed operator chain applied to the
/// smallest-cell class, first letter applied first.  The base class is built
/// with |I| extra degrees of internal headroom so the result is exact at the
/// requested truncation.
inline ClassExpression bott_samelson(const TheoryContext& ctx, int n,
                                     const std::vector<int>& word,
                                     int trunc = -1) {
  detail::require(n >= 1, "bott_samelson: rank must be >= 1");
  for (int i : word)
    detail::require(0 <= i && i < n,
                    "bott_samelson: word letter " + std::to_string(i) +
                        " out of range for rank " + std::to_string(n));
  int t = trunc < 0 ? default_trunc(FlagType::C, n) : trunc;
  int t_base = t + static_cast<int>(word.size());
  GroupLaw law = ctx.law(t_base + 1);
  Series g = samelson_base(law, n, t_base);
  for (int i : word) g = apply(law, i, g);
  ClassExpression cls;
  cls.theory = ctx.theory();
  cls.type = FlagType::C;
  cls.n = n;
  cls.label = ClassLabel::samelson_word(word);
  cls.beta = detail::beta_state(ctx.ring());
  cls.value = g;
  return cls;
}

/// Schubert class over connective K-theory (type C, rank n): the
/// Bott-Samelson class along the canonical (lexicographically least) reduced
/// word of w0 * w.  Word-independence holds over this law, so the choice is
/// immaterial; it is fixed for determinism.
inline ClassExpression schubert_ck(int n, const SignedPerm& w, int trunc = -1) {
  detail::require(static_cast<int>(w.window().size()) == n,
                  "schubert_ck: permutation rank mismatch");
  TheoryContext ctx = TheoryContext::multiplicative();
  SignedPerm w0 = longest_element(n, /*type_c=*/true);
  std::vector<int> word = canonical_word(w0 * w, /*type_c=*/true);
  ClassExpression cls = bott_samelson(ctx, n, word, trunc);
  cls.label = ClassLabel::schubert(w);
  return cls;
}

/// Type A top class prod_{i+j<=n} F(x_i, chi(y_j)) with the operator word
/// applied (first letter first).  Indices must be >= 1: type A has no
/// sign-flip operator.  Base built with |word| extra degrees of internal
/// headroom.  Unlike the type C chain (which works in the plain-y convention
/// and is converted by a y -> chi(y) substitution afterwards), type A classes
/// are produced directly in the geometric convention, so their additive
/// specializations are the classical double Schubert polynomials.
inline Series chain_from_top_a(const TheoryContext& ctx, int n,
                               const std::vector<int>& word, int trunc) {
  for (int i : word)
    detail::require(1 <= i && i < n,
                    "type A operator word letter " + std::to_string(i) +
                        " out of range for rank " + std::to_string(n));
  int t_base = trunc + static_cast<int>(word.size());
  GroupLaw law = ctx.law(t_base + 1);
  std::vector<Series> factors;
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i + j <= n; ++i)
      factors.push_back(detail::pair_factor_x_chiy(law, i, j, t_base));
  Series g = detail::pruned_product(ctx.ring(), t_base, factors);
  for (int i : word) g = apply(law, i, g);
  return g;
}

/// Type A analogue for cross-validation: operator chain from the type A top
/// class, along the canonical reduced word of w0 * w.  w must be unsigned.
inline ClassExpression schubert_ck_a(int n, const SignedPerm& w,
                                     int trunc = -1) {
  detail::require(static_cast<int>(w.window().size()) == n,
                  "schubert_ck_a: permutation rank mismatch");
  detail::require(w.is_unsigned(), "schubert_ck_a: needs an unsigned element");
  TheoryContext ctx = TheoryContext::multiplicative();
  SignedPerm w0 = longest_element(n, /*type_c=*/false);
  std::vector<int> word = canonical_word(w0 * w, /*type_c=*/false);
  int t = trunc < 0 ? default_trunc(FlagType::A, n) : trunc;
  ClassExpression cls;
  cls.theory = ctx.theory();
  cls.type = FlagType::A;
  cls.n = n;
  cls.label = ClassLabel::schubert(w);
  cls.beta = detail::beta_state(ctx.ring());
  cls.value = chain_from_top_a(ctx, n, word, t);
  return cls;
}

enum class BetaValue { zero, minus_one, symbolic };

inline std::string beta_value_name(BetaValue v) {
  switch (v) {
    case BetaValue::zero: return "0";
    case BetaValue::minus_one: return "-1";
    case BetaValue::symbolic: return "sym";
  }
  return "?";
}

/// Substitute a numeric value for beta.  beta = 0 gives the Chow-ring class,
/// beta = -1 the K-theory class; `symbolic` returns the class unchanged.
inline ClassExpression specialize(const ClassExpression& cls, BetaValue v) {
  if (v == BetaValue::symbolic) return cls;
  detail::require(cls.value.ring().kind() == RingKind::beta,
                  "specialize: class has no beta coefficient");
  ClassExpression out = cls;
  out.value =
      specialize_beta(cls.value, v == BetaValue::zero ? Rational(0) : Rational(-1));
  out.beta = beta_value_name(v);
  return out;
}

/// Replace y-variables by explicit series (e.g. geometric Chern roots).
/// Bindings must have zero constant term and must bind only y-variables.
inline Series substitute_geometric(const ClassExpression& cls,
                                   const std::map<VarId, Series>& bindings) {
  const VarTable& table = VarTable::instance();
  for (const auto& [v, s] : bindings) {
    (void)s;
    detail::require(table.info(v).stem == "y",
                    "substitute_geometric: binding for non-y variable '" +
                        table.name(v) + "'");
  }
  return cls.value.substitute(bindings);
}

/// y_j -> chi(y_j) for every y-variable in the series (the duality
/// substitution relating the plain-y classes to the subbundle products).
inline Series invert_y_alphabet(const TheoryContext& ctx, const Series& value) {
  GroupLaw law = ctx.law(value.trunc() >= 1 ? value.trunc() : 1);
  const VarTable& table = VarTable::instance();
  std::map<VarId, Series> bindings;
  for (VarId v : value.support()) {
    if (table.info(v).stem != "y") continue;
    bindings.emplace(v, detail::law_inverse_at(
                            law, Series::variable(value.ring(), value.trunc(), v)));
  }
  return value.substitute(bindings);
}

namespace detail {

/// Second-alphabet reindexing for embedded classes.  The rank-m class uses
/// y_1..y_m; inside the rank-n bundle those slots correspond to
/// y_{n-m+1}..y_n.  Type C classes carry a plain y-alphabet, and embedding
/// composes the reindexing with the formal inverse (ybar_j -> chi(y_{n-m+j}));
/// type A classes are already in the geometric convention, so only the index
/// shift remains.
inline std::map<VarId, Series> embedded_shift(const TheoryContext& ctx,
                                              FlagType type, int n, int m,
                                              int trunc) {
  GroupLaw law = ctx.law(trunc >= 1 ? trunc : 1);
  std::map<VarId, Series> shift;
  for (int j = 1; j <= m; ++j) {
    Series target =
        Series::variable(ctx.ring(), trunc, detail::yvar(n - m + j));
    if (type == FlagType::C) target = detail::law_inverse_at(law, target);
    shift.emplace(detail::yvar(j), target);
  }
  return shift;
}

}  // namespace detail

/// Embedded Schubert class over connective K-theory: the rank-m class of w'
/// (variables x_1..x_m, second alphabet reindexed to y_{n-m+1}..y_n, through
/// the formal inverse for type C) times the rank-(n,m) flag-subbundle
/// product.  The result is in the "geometric" convention: for type C it
/// compares against invert_y_alphabet(schubert value); for type A it is the
/// rank-n class itself.
inline ClassExpression schubert_embedded(FlagType type, int n, int m,
                                         const SignedPerm& wprime,
                                         int trunc = -1) {
  detail::require(1 <= m && m < n, "schubert_embedded: need 1 <= m < n");
  detail::require(static_cast<int>(wprime.window().size()) == m,
                  "schubert_embedded: rank of w' must equal m");
  TheoryContext ctx = TheoryContext::multiplicative();
  int t = trunc < 0 ? default_trunc(type, n) : trunc;
  ClassExpression connecting = type == FlagType::C
                                   ? flag_class_C(ctx, n, m, t)
                                   : flag_class_A(ctx, n, m, t);
  SignedPerm w = wprime;
  for (int r = m; r < n; ++r)
    w = type == FlagType::C ? embed_c(w) : embed_a(w);

  Series rank_m = Series::constant(ctx.ring(), t, Rational(1));
  if (!(wprime == SignedPerm::identity(m))) {
    ClassExpression inner = type == FlagType::C ? schubert_ck(m, wprime, t)
                                                : schubert_ck_a(m, wprime, t);
    rank_m = inner.value.substitute(detail::embedded_shift(ctx, type, n, m, t));
  }

  ClassExpression cls;
  cls.theory = ctx.theory();
  cls.type = type;
  cls.n = n;
  cls.label = ClassLabel::schubert(w);
  cls.beta = detail::beta_state(ctx.ring());
  cls.value = rank_m * connecting.value;
  return cls;
}

/// General-theory embedded class: the rank-m factor is the Bott-Samelson
/// class of the supplied word (Schubert classes of a general theory are only
/// defined through a chosen word).
inline ClassExpression schubert_embedded(const TheoryContext& ctx, FlagType type,
                                         int n, int m,
                                         const std::vector<int>& rank_m_word,
                                         int trunc = -1) {
  detail::require(1 <= m && m < n, "schubert_embedded: need 1 <= m < n");
  int t = trunc < 0 ? default_trunc(type, n) : trunc;
  ClassExpression connecting = type == FlagType::C
                                   ? flag_class_C(ctx, n, m, t)
                                   : flag_class_A(ctx, n, m, t);
  Series inner_value = type == FlagType::C
                           ? bott_samelson(ctx, m, rank_m_word, t).value
                           : chain_from_top_a(ctx, m, rank_m_word, t);
  std::map<VarId, Series> shift = detail::embedded_shift(ctx, type, n, m, t);
  ClassExpression cls;
  cls.theory = ctx.theory();
  cls.type = type;
  cls.n = n;
  cls.label = ClassLabel::samelson_word(rank_m_word);
  cls.beta = detail::beta_state(ctx.ring());
  cls.value = inner_value.substitute(shift) * connecting.value;
  return cls;
}

}  // namespace fgls
