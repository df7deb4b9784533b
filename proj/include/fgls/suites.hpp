#pragma once

/// @file suites.hpp
/// @brief Named self-verification suites: each check recomputes an identity
/// from two independent routes inside the library and reports whether the
/// residual vanishes identically (exactly, through the truncation order).
///
/// These back the CLI's `verify identities` command and the acceptance tests.

#include "fgls/fgl.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <string>
#include <vector>

namespace fgls {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // short witness/description on failure, empty on pass
};

inline CheckResult check(const std::string& name, bool pass,
                         const std::string& detail = "") {
  return CheckResult{name, pass, pass ? "" : detail};
}

/// Formal-group-law axioms at truncation order d: unit, commutativity,
/// associativity, and the formal inverse, for one theory.
inline std::vector<CheckResult> fgl_axiom_suite(Theory theory, int d) {
  std::vector<CheckResult> out;
  const std::string tn = theory_name(theory);
  TheoryContext ctx = standard_context(theory, d);
  GroupLaw law = ctx.law(d);
  const CoeffRing& ring = ctx.ring();
  const Series u = Series::variable(ring, d, law.u());
  const Series v = Series::variable(ring, d, law.v());
  const Series w = Series::variable(ring, d, "w");
  const Series& F = law.formal_sum();

  // F(u, 0) = u.
  Series unit_res = law.sum(u, Series::zero(ring, d)) - u;
  out.push_back(check(tn + "/unit", unit_res.is_zero(), unit_res.str()));

  // F(u, v) = F(v, u).
  Series comm_res = law.sum(u, v) - law.sum(v, u);
  out.push_back(check(tn + "/commutative", comm_res.is_zero(), comm_res.str()));

  // F(F(u, v), w) = F(u, F(v, w)).
  Series assoc_res = law.sum(F, w) - law.sum(u, law.sum(v, w));
  out.push_back(
      check(tn + "/associative", assoc_res.is_zero(), assoc_res.str()));

  // F(u, chi(u)) = 0.
  Series inv_res = law.sum(u, law.formal_inverse());
  out.push_back(check(tn + "/inverse", inv_res.is_zero(), inv_res.str()));

  // log F(u,v) = log u + log v (the logarithm linearizes the law; exact
  // over Q, so run it in every theory).
  Series log_res = law.logarithm().substitute(law.u(), law.sum(u, v)) -
                   law.logarithm() -
                   law.logarithm().substitute(law.u(), v);
  out.push_back(check(tn + "/logarithm", log_res.is_zero(), log_res.str()));

  // exp(log(u)) = u.
  Series explog_res =
      law.exponential().substitute(law.u(), law.logarithm()) - u;
  out.push_back(
      check(tn + "/exp-log", explog_res.is_zero(), explog_res.str()));

  return out;
}

inline std::vector<CheckResult> fgl_axiom_suite_all(int d) {
  std::vector<CheckResult> out;
  for (Theory t :
       {Theory::additive, Theory::multiplicative, Theory::universal}) {
    auto part = fgl_axiom_suite(t, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

/// Symmetric-function identities: the two-variable e/h relations, the
/// recursion for P_l, the Whitney product route, the symplectic projective
/// bundle decomposition identity, and the elementary-symmetric recursion that
/// presents a symplectic flag bundle ring over the next smaller one.
/// All residuals must vanish identically at truncation order d.
inline std::vector<CheckResult> symfun_suite(Theory theory, int d,
                                             int max_i = 8, int max_n = 3);

inline std::vector<CheckResult> symfun_suite_all(int d, int max_i = 8,
                                                 int max_n = 3) {
  std::vector<CheckResult> out;
  for (Theory t :
       {Theory::additive, Theory::multiplicative, Theory::universal}) {
    auto part = symfun_suite(t, d, max_i, max_n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace fgls

#include "fgls/symfun.hpp"

namespace fgls {

inline std::vector<CheckResult> symfun_suite(Theory theory, int d, int max_i,
                                             int max_n) {
  std::vector<CheckResult> out;
  const std::string tn = theory_name(theory);
  TheoryContext ctx = standard_context(theory, d);
  const CoeffRing& ring = ctx.ring();
  GroupLaw law = ctx.law(d);

  auto var = [&](const std::string& name) {
    return Series::variable(ring, d, name);
  };
  auto e = [&](int k, const std::vector<Series>& vs) {
    return elementary_symmetric(k, vs, ring, d);
  };
  auto h = [&](int k, const std::vector<Series>& vs) {
    return complete_homogeneous(k, vs, ring, d);
  };
  auto c = [&](int i, int rank) { return chern_symbol(ring, d, i, rank); };
  auto P = [&](int l, int rank, const std::vector<Series>& vs) {
    return l < 0 ? Series::zero(ring, d) : p_series(l, rank, vs, ring, d);
  };

  const std::vector<Series> z = {var("z1"), var("z2")};

  // (i)  h_i = e_1 h_{i-1} - e_2 h_{i-2}   in two variables.
  // (ii) z1^i = h_i - z2 h_{i-1}.
  for (int i = 1; i <= max_i; ++i) {
    Series res1 = h(i, z) - e(1, z) * h(i - 1, z) + e(2, z) * h(i - 2, z);
    out.push_back(check(tn + "/h-recursion/i=" + std::to_string(i),
                        res1.is_zero(), res1.str()));
    Series res2 = z[0].pow(i) - h(i, z) + z[1] * h(i - 1, z);
    out.push_back(check(tn + "/power-identity/i=" + std::to_string(i),
                        res2.is_zero(), res2.str()));
  }

  // P_m = c_m - e_1 P_{m-1} - e_2 P_{m-2}  (any rank; symbols up to rank 8).
  const int rank = max_i;
  for (int m = 1; m <= max_i; ++m) {
    Series res = P(m, rank, z) - c(m, rank) + e(1, z) * P(m - 1, rank, z) +
                 e(2, z) * P(m - 2, rank, z);
    out.push_back(check(tn + "/p-recursion/m=" + std::to_string(m),
                        res.is_zero(), res.str()));
  }

  for (int n = 1; n <= max_n; ++n) {
    const int rk = 2 * n;
    // Whitney route: c_t(E) = [sum_i P_i(a, chi a) t^i] * c_t(L) c_t(L^dual)
    // with L of first Chern class a; compare t-coefficients 1..2n.
    Series a = var("a");
    Series ca = law.inverse(a);
    std::vector<Series> roots = {a, ca};
    for (int m = 1; m <= rk; ++m) {
      Series rhs = P(m, rk, roots) + e(1, roots) * P(m - 1, rk, roots) +
                   e(2, roots) * P(m - 2, rk, roots);
      Series res = c(m, rk) - rhs;
      out.push_back(check(tn + "/whitney/n=" + std::to_string(n) +
                              ",m=" + std::to_string(m),
                          res.is_zero(), res.str()));
    }
    // Symplectic projective bundle decomposition (from the two-variable
    // power identity h_i - z2 h_{i-1} = z1^i):
    // P_{2n}(xi, 0) = P_{2n}(xi, chi xi) + chi(xi) P_{2n-1}(xi, chi xi).
    Series xi = var("t1");
    Series cxi = law.inverse(xi);
    std::vector<Series> pair = {xi, cxi};
    std::vector<Series> alone = {xi, Series::zero(ring, d)};
    Series res = P(rk, rk, alone) -
                 (P(rk, rk, pair) + cxi * P(rk - 1, rk, pair));
    out.push_back(check(tn + "/proj-skew/n=" + std::to_string(n),
                        res.is_zero(), res.str()));
  }

  // Flag-bundle elementary-symmetric recursion and the ideal-generator
  // rewriting:  with roots (t_1..t_n, chi(t_1)..chi(t_n)),
  //   e_i^(2n-2) = e_i^(2n) - e_{i-1}^(2n-2) (t_n + chi t_n)
  //                        - e_{i-2}^(2n-2) t_n chi(t_n),
  //   P_i - e_i^(2n-2) = f_i - (P_{i-1} - e_{i-1}^(2n-2)) (t_n + chi t_n)
  //                          - (P_{i-2} - e_{i-2}^(2n-2)) t_n chi(t_n),
  // where P_j = P_j^{E_n}(t_n, chi t_n) and f_i = c_i - e_i^(2n).
  for (int n = 1; n <= max_n; ++n) {
    const int rk = 2 * n;
    std::vector<Series> big, small;
    for (int i = 1; i <= n; ++i) {
      Series t = Series::variable(ring, d, indexed_var("t", i));
      big.push_back(t);
      big.push_back(law.inverse(t));
      if (i < n) {
        small.push_back(t);
        small.push_back(law.inverse(t));
      }
    }
    Series tn_ = big[2 * static_cast<std::size_t>(n) - 2];
    Series ctn = big[2 * static_cast<std::size_t>(n) - 1];
    auto esm = [&](int i) { return e(i, small); };
    for (int i = 1; i <= rk; ++i) {
      Series res1 = esm(i) - e(i, big) + esm(i - 1) * (tn_ + ctn) +
                    esm(i - 2) * (tn_ * ctn);
      out.push_back(check(tn + "/flag-e-recursion/n=" + std::to_string(n) +
                              ",i=" + std::to_string(i),
                          res1.is_zero(), res1.str()));
      std::vector<Series> tr = {tn_, ctn};
      Series f_i = c(i, rk) - e(i, big);
      Series lhs = P(i, rk, tr) - esm(i);
      Series rhs = f_i - (P(i - 1, rk, tr) - esm(i - 1)) * (tn_ + ctn) -
                   (P(i - 2, rk, tr) - esm(i - 2)) * (tn_ * ctn);
      Series res2 = lhs - rhs;
      out.push_back(check(tn + "/flag-p-vs-e/n=" + std::to_string(n) +
                              ",i=" + std::to_string(i),
                          res2.is_zero(), res2.str()));
    }
  }

  // The rank-2 base case of the flag-ring presentation:
  // P_1(t_1, chi t_1) = f_1 and P_2(t_1, chi t_1) = f_2 - h_1 f_1.
  {
    Series t1 = var("t1");
    Series ct1 = law.inverse(t1);
    std::vector<Series> tr = {t1, ct1};
    Series f1 = c(1, 2) - e(1, tr);
    Series f2 = c(2, 2) - e(2, tr);
    Series res1 = P(1, 2, tr) - f1;
    out.push_back(check(tn + "/rank2-base/p1", res1.is_zero(), res1.str()));
    Series res2 = P(2, 2, tr) - (f2 - h(1, tr) * f1);
    out.push_back(check(tn + "/rank2-base/p2", res2.is_zero(), res2.str()));
  }

  return out;
}

}  // namespace fgls

#include "fgls/classes.hpp"

namespace fgls {

/// Total degree of the flag-subbundle product's lowest term: the number of
/// factors (each factor is a formal sum of two first-degree roots).
inline int flag_product_min_degree(FlagType type, int n, int m) {
  int d = 0;
  for (int j = 1; j <= n - m; ++j) {
    for (int i = 1; i + j <= n; ++i) ++d;
    if (type == FlagType::C)
      for (int i = 1; i + j <= n + 1; ++i) ++d;
  }
  return d;
}

/// Telescoping suite: the flag-subbundle class at level m equals the
/// one-step push-forward factor times the class at level m+1, exactly, for
/// every adjacent pair of levels up to rank max_n.  Each case runs at
/// truncation (lowest degree + headroom), so the identity is checked through
/// `headroom` orders of genuinely formal-group corrections beyond the leading
/// multilinear layer.  High-degree cases cap the headroom to keep the largest
/// products (16 factors at rank 4) affordable.
inline std::vector<CheckResult> telescope_suite(Theory theory, int max_n = 4,
                                                int headroom = 2) {
  std::vector<CheckResult> out;
  const std::string tn = theory_name(theory);
  auto case_trunc = [&](FlagType type, int n, int m) {
    int d = flag_product_min_degree(type, n, m);
    int h = d > 12 ? std::min(headroom, 1) : headroom;
    return d + h;
  };
  int max_trunc = 2;
  for (int n = 1; n <= max_n; ++n)
    for (int m = 0; m < n; ++m)
      max_trunc = std::max(max_trunc, case_trunc(FlagType::C, n, m));
  TheoryContext ctx = standard_context(theory, max_trunc);

  // The right-hand side is assembled with truncated_product so each factor
  // is computed at its own narrow window (lowest degree + headroom) rather
  // than at the full product order; by the truncated_product contract the
  // comparison below is still exact through order t.  Repeated (n, m, t)
  // products (a case's left side often reappears as the next case's right
  // side) are computed once.
  std::map<std::tuple<int, int, int, int>, Series> memo;
  auto flag_value = [&](FlagType type, int n, int m, int t) -> const Series& {
    auto key = std::make_tuple(static_cast<int>(type), n, m, t);
    auto it = memo.find(key);
    if (it == memo.end()) {
      Series v = type == FlagType::A ? flag_class_A(ctx, n, m, t).value
                                     : flag_class_C(ctx, n, m, t).value;
      it = memo.emplace(key, std::move(v)).first;
    }
    return it->second;
  };

  for (int n = 2; n <= max_n; ++n) {
    for (int m = 1; m < n; ++m) {
      int t = case_trunc(FlagType::A, n, m);
      int d = flag_product_min_degree(FlagType::A, n, m);
      int dup = flag_product_min_degree(FlagType::A, n, m + 1);
      const Series& lhs = flag_value(FlagType::A, n, m, t);
      Series step = step_product_A(ctx, n, m, t - dup);
      const Series& up = flag_value(FlagType::A, n, m + 1, t - (d - dup));
      Series res = lhs - truncated_product(step, up, t);
      out.push_back(check(tn + "/telescope-A/n=" + std::to_string(n) +
                              ",m=" + std::to_string(m),
                          res.is_zero(), res.str()));
    }
  }
  for (int n = 1; n <= max_n; ++n) {
    for (int m = 0; m < n; ++m) {
      int t = case_trunc(FlagType::C, n, m);
      int d = flag_product_min_degree(FlagType::C, n, m);
      int dup = flag_product_min_degree(FlagType::C, n, m + 1);
      const Series& lhs = flag_value(FlagType::C, n, m, t);
      Series step = step_product_C(ctx, n, m, t - dup);
      const Series& up = flag_value(FlagType::C, n, m + 1, t - (d - dup));
      Series res = lhs - truncated_product(step, up, t);
      out.push_back(check(tn + "/telescope-C/n=" + std::to_string(n) +
                              ",m=" + std::to_string(m),
                          res.is_zero(), res.str()));
    }
  }
  return out;
}

inline std::vector<CheckResult> telescope_suite_all(int max_n = 4,
                                                    int headroom = 2) {
  std::vector<CheckResult> out;
  for (Theory t :
       {Theory::additive, Theory::multiplicative, Theory::universal}) {
    auto part = telescope_suite(t, max_n, headroom);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

namespace detail {

inline std::string word_text(const std::vector<int>& word) {
  std::string s = "(";
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(word[k]);
  }
  return s + ")";
}

inline std::string window_text(const SignedPerm& w) {
  std::string s = "[";
  const std::vector<int>& win = w.window();
  for (std::size_t k = 0; k < win.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(win[k]);
  }
  return s + "]";
}

}  // namespace detail

/// Braid suite: over connective K-theory every braid relation holds (checked
/// on all monomials of total degree <= degree_bound); over the universal law
/// at least one relation fails, with a recorded witness.
inline std::vector<CheckResult> braid_suite(int degree_bound = 4) {
  std::vector<CheckResult> out;
  auto summarize = [](const BraidReport& rep) {
    for (const BraidPair& p : rep.pairs)
      if (!p.holds)
        return detail::word_text(p.left) + " vs " + detail::word_text(p.right) +
               " differ on " + p.witness;
    return std::string();
  };

  BraidReport a3 =
      braid_report(TheoryContext::multiplicative(), false, 3, degree_bound);
  out.push_back(check("ck/braid/type-A/n=3", a3.all_hold, summarize(a3)));

  BraidReport c2 =
      braid_report(TheoryContext::multiplicative(), true, 2, degree_bound);
  out.push_back(check("ck/braid/type-C/n=2", c2.all_hold, summarize(c2)));

  BraidReport add =
      braid_report(TheoryContext::additive(), true, 2, degree_bound);
  out.push_back(check("additive/braid/type-C/n=2", add.all_hold, summarize(add)));

  BraidReport uni = braid_report(TheoryContext::universal(6), false, 3, 2);
  out.push_back(check("universal/braid-counterexample/type-A/n=3",
                      !uni.all_hold,
                      "every braid relation held for the generic law"));
  return out;
}

/// Word-independence suite: for every group element w of the rank-n
/// hyperoctahedral group, the operator-chain class is identical across all
/// reduced words of w0 * w over connective K-theory.
inline std::vector<CheckResult> ck_words_suite(int n = 2, int trunc = -1) {
  std::vector<CheckResult> out;
  TheoryContext ctx = TheoryContext::multiplicative();
  int t = trunc < 0 ? default_trunc(FlagType::C, n) : trunc;
  SignedPerm w0 = longest_element(n, /*type_c=*/true);
  for (const SignedPerm& w : all_elements(n, /*type_c=*/true)) {
    std::vector<std::vector<int>> words = reduced_words(w0 * w, /*type_c=*/true);
    Series first = bott_samelson(ctx, n, words[0], t).value;
    bool ok = true;
    std::string bad;
    for (std::size_t k = 1; k < words.size() && ok; ++k) {
      Series other = bott_samelson(ctx, n, words[k], t).value;
      if (!(other == first)) {
        ok = false;
        bad = "word " + detail::word_text(words[k]) + " disagrees with " +
              detail::word_text(words[0]);
      }
    }
    out.push_back(check("ck/word-independence/w=" + detail::window_text(w) +
                            " (" + std::to_string(words.size()) + " words)",
                        ok, bad));
  }
  return out;
}

}  // namespace fgls
