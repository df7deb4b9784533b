// Tests for the generalized divided-difference operators.  The reference
// implementation is the rational-function oracle: the same defining
// fractions computed with dense polynomials and literal denominators.

#include "fgls/divdiff.hpp"

#include <catch_amalgamated.hpp>

#include <random>

#include "fgls/fgl.hpp"
#include "oracle/oracle.hpp"
#include "test_support.hpp"

using namespace fgls;

namespace {

Series xs(const CoeffRing& ring, int trunc, int i, int exp = 1) {
  return Series::from_term(ring, trunc,
                           Monomial::variable(indexed_var("x", i), exp),
                           Coeff(1));
}

Coeff beta_c(const CoeffRing& ring) { return Coeff::generator(ring, 0, 1); }

Monomial xmono(int e1, int e2) {
  std::vector<Monomial::Factor> fs;
  if (e1 > 0) fs.emplace_back(indexed_var("x", 1), e1);
  if (e2 > 0) fs.emplace_back(indexed_var("x", 2), e2);
  return Monomial::from_factors(std::move(fs));
}

}  // namespace

TEST_CASE("reflection action") {
  auto ctx = TheoryContext::additive();
  GroupLaw law = ctx.law(6);
  Series f = xs(ctx.ring(), 6, 1);
  CHECK(sigma(law, 1, f) == xs(ctx.ring(), 6, 2));
  CHECK(sigma(law, 0, f) == f * Rational(-1));

  // sigma_0 is an involution (modulo truncation) for every law.
  std::mt19937 rng(2026);
  for (const TheoryContext& c :
       {TheoryContext::additive(), TheoryContext::multiplicative(),
        TheoryContext::universal(5)}) {
    GroupLaw l = c.law(6);
    for (int rep = 0; rep < 10; ++rep) {
      Series g = testsup::random_series(rng, c.ring(), 6,
                                        testsup::xyvars(2), 4, 5);
      CHECK(sigma(l, 0, sigma(l, 0, g)) == g);
      CHECK(sigma(l, 1, sigma(l, 1, g)) == g);
    }
  }
}

TEST_CASE("first-index fixtures for the additive law") {
  auto ctx = TheoryContext::additive();
  GroupLaw law = ctx.law(7);
  // A_1(x_1) = (x_1 - x_2)/(x_1 - x_2) = 1.
  Series a1 = apply(law, 1, xs(ctx.ring(), 6, 1));
  CHECK(a1 == Series::constant(ctx.ring(), 5, 1));
  // A_0(x_1) = (1 + sigma_0)(x_1 / (-2 x_1)) = -1/2 - 1/2 = -1.
  Series a0 = apply(law, 0, xs(ctx.ring(), 6, 1));
  CHECK(a0 == Series::constant(ctx.ring(), 5, -1));
  // A_1 annihilates symmetric input and squares to zero on polynomials.
  Series sym = xs(ctx.ring(), 6, 1) + xs(ctx.ring(), 6, 2);
  CHECK(apply(law, 1, sym).is_zero());
  Series f = xs(ctx.ring(), 6, 1, 3);
  CHECK(apply(law, 1, apply(law, 1, f)).is_zero());
}

TEST_CASE("multiplicative closed forms agree with their defining values") {
  auto ctx = TheoryContext::multiplicative();
  const CoeffRing& R = ctx.ring();
  Coeff beta = beta_c(R);

  // phi_i(1) = -beta for every index, the exceptional one included.
  Series one(Series::constant(R, 6, 1));
  CHECK(apply_ck(1, one) ==
        Series::constant(R, 5, Coeff() - beta));
  CHECK(apply_ck(0, one) == Series::constant(R, 5, Coeff() - beta));
  // The uniform operator path computes the same values.
  GroupLaw law = ctx.law(7);
  CHECK(apply(law, 1, one) == Series::constant(R, 5, Coeff() - beta));
  CHECK(apply(law, 0, one) == Series::constant(R, 5, Coeff() - beta));

  // phi_1 on x_1 and x_1^2, checked against the rational-function oracle.
  for (int e : {1, 2}) {
    Series f = xs(R, 6, 1, e);
    Series got = apply_ck(1, f);
    oracle::ORat want = oracle::divided_difference(
        oracle::OLaw::ck, 1, oracle::series_to_opoly(f));
    CHECK(oracle::series_matches_ratfun(got, want));
  }
  // phi_1(x_1^2) = x_1 + x_2 - beta(x_1^2 + x_1 x_2 + x_2^2).
  Series x1 = xs(R, 6, 1), x2 = xs(R, 6, 2);
  Series expect = (x1 + x2 -
                   (x1 * x1 + x1 * x2 + x2 * x2) * beta)
                      .retrunc(5);
  CHECK(apply_ck(1, xs(R, 6, 1, 2)) == expect);

  // phi_0(x_1) = -1 exactly, and phi_0 annihilates x_1^2.
  CHECK(apply_ck(0, xs(R, 8, 1)) == Series::constant(R, 7, -1));
  CHECK(apply_ck(0, xs(R, 8, 1, 2)).is_zero());

  // beta = 0 degenerates phi_i to the classical Newton divided difference.
  std::mt19937 rng(7012);
  for (int rep = 0; rep < 20; ++rep) {
    Series f = testsup::random_series(rng, R, 6, testsup::xyvars(2), 4, 4,
                                      /*integer_coeffs=*/true);
    Series got = specialize_beta(apply_ck(1, f), 0);
    oracle::OPoly fp = oracle::series_to_opoly(specialize_beta(f, 0));
    CHECK(oracle::opoly_matches_series(got, oracle::newton_divided(1, fp)));
  }
}

TEST_CASE("uniform path, closed form, and fraction oracle all agree") {
  auto ctx = TheoryContext::multiplicative();
  GroupLaw law = ctx.law(7);
  std::mt19937 rng(90210);
  auto vars = testsup::xyvars(3);
  int checked = 0;
  for (int rep = 0; rep < 200; ++rep) {
    int i = rep % 3;  // indices 0, 1, 2
    Series f = testsup::random_series(rng, ctx.ring(), 6, vars, 4, 5);
    Series via_law = apply(law, i, f);
    Series via_closed = apply_ck(i, f);
    REQUIRE(via_law == via_closed);
    oracle::ORat want = oracle::divided_difference(
        oracle::OLaw::ck, i, oracle::series_to_opoly(f));
    REQUIRE(oracle::series_matches_ratfun(via_law, want));
    ++checked;
  }
  CHECK(checked == 200);
}

TEST_CASE("uniform path matches the fraction oracle for the additive law") {
  auto ctx = TheoryContext::additive();
  GroupLaw law = ctx.law(7);
  std::mt19937 rng(5150);
  auto vars = testsup::xyvars(3);
  for (int rep = 0; rep < 60; ++rep) {
    int i = rep % 3;
    Series f = testsup::random_series(rng, ctx.ring(), 6, vars, 4, 5,
                                      /*integer_coeffs=*/true);
    Series got = apply(law, i, f);
    oracle::ORat want = oracle::divided_difference(
        oracle::OLaw::additive, i, oracle::series_to_opoly(f));
    REQUIRE(oracle::series_matches_ratfun(got, want));
  }
}

TEST_CASE("word composition") {
  auto ctx = TheoryContext::multiplicative();
  GroupLaw law = ctx.law(9);
  Series f = xs(ctx.ring(), 8, 1, 2) * xs(ctx.ring(), 8, 2);
  // The empty word is the identity.
  CHECK(apply_word(law, {}, f) == f);
  // The first letter acts first: A_{(1,0)} = A_0 after A_1.
  CHECK(apply_word(law, {1, 0}, f) == apply(law, 0, apply(law, 1, f)));
  // Braid words agree for the multiplicative law (n = 3, degree <= 4).
  std::mt19937 rng(31337);
  auto vars = testsup::xvars(3);
  for (int rep = 0; rep < 15; ++rep) {
    Series p = testsup::random_series(rng, ctx.ring(), 8, vars, 4, 5);
    CHECK(apply_word(law, {1, 2, 1}, p) == apply_word(law, {2, 1, 2}, p));
  }
}

TEST_CASE("operator output is symmetric and Coeff-linear over invariants") {
  std::mt19937 rng(404);
  for (const TheoryContext& ctx :
       {TheoryContext::additive(), TheoryContext::multiplicative(),
        TheoryContext::universal(6)}) {
    GroupLaw law = ctx.law(8);
    // sigma_i o A_i = A_i on monomials of degree <= 5.
    for (int e1 = 0; e1 <= 3; ++e1) {
      for (int e2 = 0; e2 + e1 <= 5; ++e2) {
        Series m = Series::from_term(ctx.ring(), 7, xmono(e1, e2), Coeff(1));
        Series a = apply(law, 1, m);
        CHECK(sigma(law, 1, a) == a);
      }
    }
    // A_i(f g) = A_i(f) g when g is sigma_i-invariant, and the analogue
    // for the exceptional index with g free of x_1.
    for (int rep = 0; rep < 8; ++rep) {
      Series f = testsup::random_series(rng, ctx.ring(), 7,
                                        testsup::xvars(2), 3, 4);
      Series x1 = xs(ctx.ring(), 7, 1), x2 = xs(ctx.ring(), 7, 2);
      Series y1 = Series::variable(ctx.ring(), 7, indexed_var("y", 1));
      Series g_sym = x1 * x2 + x1 + x2 + y1;  // sigma_1-invariant
      CHECK(apply(law, 1, f * g_sym) ==
            apply(law, 1, f) * g_sym.retrunc(6));
      Series g_0 = x2 * x2 + y1;  // sigma_0-invariant (no x_1)
      CHECK(apply(law, 0, f * g_0) == apply(law, 0, f) * g_0.retrunc(6));
    }
  }
}

TEST_CASE("multiplicative operators square to -beta (and +beta at index 0)") {
  auto ctx = TheoryContext::multiplicative();
  const CoeffRing& R = ctx.ring();
  Coeff beta = beta_c(R);
  std::mt19937 rng(161803);
  auto vars = testsup::xyvars(2);
  for (int rep = 0; rep < 100; ++rep) {
    Series f = testsup::random_series(rng, R, 6, vars, 4, 5);
    Series once = apply_ck(1, f);
    CHECK(apply_ck(1, once) == (once.retrunc(4) * (Coeff() - beta)));
    // Regression constant: phi_0 o phi_0 = -beta phi_0 as well (fixed once
    // from the rank-2 fraction oracle; forced by phi_0(1) = -beta given
    // that the composition is a multiple of phi_0).
    Series z = apply_ck(0, f);
    CHECK(apply_ck(0, z) == z.retrunc(4) * (Coeff() - beta));
  }
  // The same composition law through the fraction oracle at rank 2.
  oracle::OPoly p = oracle::OPoly::var("x1") * oracle::OPoly::var("x2") +
                    oracle::OPoly::var("x1");
  Series fs = xs(R, 8, 1) * xs(R, 8, 2) + xs(R, 8, 1);
  Series twice = apply_ck(0, apply_ck(0, fs));
  oracle::ORat once_o = oracle::divided_difference(oracle::OLaw::ck, 0, p);
  oracle::ORat beta_o = oracle::ORat::from(oracle::OPoly::var("beta"));
  oracle::ORat want = -(beta_o * once_o);
  CHECK(oracle::series_matches_ratfun(twice, want));
}

TEST_CASE("degree drop and integrality") {
  auto ctx = TheoryContext::multiplicative();
  GroupLaw law = ctx.law(8);
  // Homogeneous input of combined degree k maps to degree k - 1 (or zero).
  for (int e1 = 0; e1 <= 3; ++e1) {
    for (int e2 = 0; e2 <= 3; ++e2) {
      Series m = Series::from_term(ctx.ring(), 7, xmono(e1, e2), Coeff(1));
      for (int i : {0, 1}) {
        Series a = apply(law, i, m);
        if (a.is_zero()) continue;
        auto deg = a.homogeneous_degree();
        REQUIRE(deg.has_value());
        CHECK(*deg == e1 + e2 - 1);
      }
    }
  }
  // Z[beta] in, Z[beta] out, despite rational intermediates.
  std::mt19937 rng(271828);
  auto vars = testsup::xyvars(2);
  for (int rep = 0; rep < 100; ++rep) {
    Series f = testsup::random_series(rng, ctx.ring(), 6, vars, 4, 5,
                                      /*integer_coeffs=*/true);
    REQUIRE(f.is_integral());
    for (int i : {0, 1}) CHECK(apply_ck(i, f).is_integral());
  }
}

TEST_CASE("braid relations hold for additive and multiplicative laws") {
  // Multiplicative, symmetric-group part, rank 3.
  BraidReport mult_a =
      braid_report(TheoryContext::multiplicative(), false, 3, 4);
  CHECK(mult_a.all_hold);
  REQUIRE(mult_a.pairs.size() == 1);
  CHECK(mult_a.pairs[0].left == std::vector<int>{1, 2, 1});
  // Multiplicative, hyperoctahedral rank 2: the quartet relation.
  BraidReport mult_c =
      braid_report(TheoryContext::multiplicative(), true, 2, 4);
  CHECK(mult_c.all_hold);
  REQUIRE(mult_c.pairs.size() == 1);
  CHECK(mult_c.pairs[0].left == std::vector<int>{0, 1, 0, 1});
  CHECK(mult_c.pairs[0].right == std::vector<int>{1, 0, 1, 0});
  // Additive, hyperoctahedral rank 2.
  CHECK(braid_report(TheoryContext::additive(), true, 2, 4).all_hold);
}

TEST_CASE("braid relations fail for a generic law, with a recorded witness") {
  BraidReport rep = braid_report(TheoryContext::universal(6), false, 3, 2);
  REQUIRE(rep.pairs.size() == 1);
  CHECK_FALSE(rep.all_hold);
  CHECK_FALSE(rep.pairs[0].holds);
  CHECK_FALSE(rep.pairs[0].witness.empty());
  CHECK_FALSE(rep.pairs[0].difference.empty());
  CHECK(rep.pairs[0].left == std::vector<int>{1, 2, 1});
  CHECK(rep.pairs[0].right == std::vector<int>{2, 1, 2});
  // Regression pin: the discrepancy shows up already on the constant 1, and
  // its lowest-degree coefficient is a fixed polynomial in the generic-law
  // structure constants.
  CHECK(rep.pairs[0].witness == "1");
  INFO("difference = " << rep.pairs[0].difference);
  const std::string& diff = rep.pairs[0].difference;
  CHECK(diff.find("4*m1*m3 - 12*m1^2*m2 + 8*m1^4") != std::string::npos);
  CHECK(diff.find("x1") != std::string::npos);
}

TEST_CASE("generic-law operators do not square to a scalar multiple") {
  auto ctx = TheoryContext::universal(6);
  GroupLaw law = ctx.law(6);
  Series x1 = Series::variable(ctx.ring(), 5, indexed_var("x", 1));
  Series once = apply(law, 1, x1 * x1);
  Series twice = apply(law, 1, once);
  // Empirical pin of the composite for the generic law.  Unlike the
  // multiplicative case (where the operators square to -beta times
  // themselves), the composite here is NOT a scalar multiple of the single
  // application: matching the degree-1 terms forces the scalar -2*m1, but the
  // composite then disagrees in degree 3.
  CHECK(twice.str() ==
        "(-2*m1)*x1 + (-2*m1)*x2 + (4*m1^2)*x1^2 + (4*m1^2)*x1*x2 + "
        "(4*m1^2)*x2^2 + (-2*m3 + 6*m1*m2 - 4*m1^3)*x1^3 + "
        "(2*m3 - 4*m1^3)*x1^2*x2 + (2*m3 - 4*m1^3)*x1*x2^2 + "
        "(-2*m3 + 6*m1*m2 - 4*m1^3)*x2^3");
  Coeff m1 = Coeff::generator(ctx.ring(), 0);
  Series scaled = (once * m1 * Rational(-2)).retrunc(twice.trunc());
  CHECK_FALSE(twice == scaled);
}

TEST_CASE("headroom is enforced") {
  auto ctx = TheoryContext::additive();
  GroupLaw law = ctx.law(6);
  Series f = xs(ctx.ring(), 6, 1);  // same truncation as the law
  CHECK_THROWS_AS(apply(law, 1, f), Error);
}
