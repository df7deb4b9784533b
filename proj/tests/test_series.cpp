// Tests for the exact truncated series layer: arithmetic, substitution,
// unit inversion, exact linear division, grading, and integrality.

#include "fgls/series.hpp"

#include <catch_amalgamated.hpp>

#include "oracle/oracle.hpp"
#include "test_support.hpp"

using namespace fgls;

namespace {

Series var(const CoeffRing& ring, int trunc, const std::string& name) {
  return Series::variable(ring, trunc, name);
}

}  // namespace

TEST_CASE("monomial ordering is graded, earlier-variable-higher-power first") {
  VarId x1 = indexed_var("x", 1), x2 = indexed_var("x", 2), y1 = indexed_var("y", 1);
  Monomial one = Monomial::unit();
  Monomial mx1 = Monomial::variable(x1);
  Monomial mx1sq = Monomial::variable(x1, 2);
  Monomial mx1x2 = Monomial::variable(x1) * Monomial::variable(x2);
  Monomial mx2sq = Monomial::variable(x2, 2);
  Monomial mx1y1 = Monomial::variable(x1) * Monomial::variable(y1);
  CHECK(one.cmp(mx1) < 0);
  CHECK(mx1.cmp(mx1sq) < 0);
  CHECK(mx1sq.cmp(mx1x2) < 0);
  CHECK(mx1x2.cmp(mx1y1) < 0);
  CHECK(mx1y1.cmp(mx2sq) < 0);
  CHECK(mx1x2.cmp(mx1x2) == 0);
  CHECK(mx1x2 * Monomial::unit() == mx1x2);
  CHECK(mx1sq.divided_by(x1) == mx1);
  CHECK(mx1sq.divided_by(x1, 2) == one);
}

TEST_CASE("variables carry weights; weighted degree truncates") {
  VarId c2 = var_id("c2", 2);
  CHECK(VarTable::instance().weight(c2) == 2);
  CHECK(Monomial::variable(c2, 3).degree() == 6);
  // Re-interning with a different weight is an error.
  CHECK_THROWS_AS(VarTable::instance().intern("c2", 1), Error);
  // A weight-2 variable does not fit in a trunc-1 series.
  Series s = Series::variable(CoeffRing::integers(), 1, c2);
  CHECK(s.is_zero());
}

TEST_CASE("coefficient arithmetic and printing in Z[beta]") {
  CoeffRing ring = CoeffRing::with_beta();
  Coeff one(1);
  Coeff beta = Coeff::generator(ring, 0);
  Coeff c = one - Coeff(2) * beta + Coeff(3) * beta * beta;
  CHECK(c.str(ring) == "1 - 2*beta + 3*beta^2");
  CHECK(Coeff::parse(ring, "1 - 2*beta + 3*beta^2") == c);
  CHECK(Coeff::parse(ring, " -beta^2  + 1/2 ").str(ring) == "1/2 - beta^2");
  CHECK(Coeff::parse(ring, "0").is_zero());
  CHECK(Coeff::parse(ring, "beta - beta").is_zero());
  CHECK((c - c).is_zero());
  CHECK(c.is_integral());
  CHECK_FALSE((c / Rational(2)).is_integral());
  int deg = 99;
  CHECK(beta.homogeneous_degree(ring, &deg));
  CHECK(deg == -1);
  CHECK_FALSE(c.homogeneous_degree(ring, &deg));
}

TEST_CASE("coefficient printing in the universal ring") {
  CoeffRing ring = CoeffRing::universal(3);
  Coeff m1 = Coeff::generator(ring, 0);
  Coeff m2 = Coeff::generator(ring, 1);
  Coeff m3 = Coeff::generator(ring, 2);
  Coeff c = m1 * m2 - m3 * Rational(1, 2);
  // m1*m2 and m3 both have graded degree -3; ties break lexicographically.
  CHECK(c.str(ring) == "-1/2*m3 + m1*m2");
  CHECK(Coeff::parse(ring, c.str(ring)) == c);
  int deg = 0;
  CHECK(c.homogeneous_degree(ring, &deg));
  CHECK(deg == -3);
}

TEST_CASE("series addition and multiplication are exact") {
  CoeffRing ring = CoeffRing::integers();
  int d = 6;
  Series x1 = var(ring, d, "x1"), y1 = var(ring, d, "y1");
  Series s = (x1 + y1) * (x1 + y1);
  Series expect = x1 * x1 + Rational(2) * (x1 * y1) + y1 * y1;
  CHECK(s == expect);
  CHECK(s.str() == "x1^2 + 2*x1*y1 + y1^2");
  // x1^3 - y1^3 has no degree-2 terms.
  Series t = x1.pow(3) - y1.pow(3);
  CHECK(t.coefficient(Monomial::variable(indexed_var("x", 1), 2)).is_zero());
}

TEST_CASE("multiplication truncates by weighted degree") {
  CoeffRing ring = CoeffRing::integers();
  Series x1 = var(ring, 2, "x1");
  Series p = (x1 + x1 * x1) * (x1 + x1 * x1);
  // Degree-3 and -4 parts fall away; only x1^2 remains.
  CHECK(p == x1 * x1);
  CHECK(p.max_degree() == 2);
}

TEST_CASE("mixing truncation orders or rings is an error") {
  Series a = var(CoeffRing::integers(), 3, "x1");
  Series b = var(CoeffRing::integers(), 4, "x1");
  CHECK_THROWS_AS(a + b, Error);
  Series c = var(CoeffRing::with_beta(), 3, "x1");
  CHECK_THROWS_AS(a * c, Error);
  CHECK(a + b.retrunc(3) == Rational(2) * a);
}

TEST_CASE("substitution: variable swap is exact and involutive") {
  CoeffRing ring = CoeffRing::with_beta();
  int d = 5;
  VarId x1 = indexed_var("x", 1), x2 = indexed_var("x", 2);
  std::mt19937 rng(20260816);
  for (int rep = 0; rep < 20; ++rep) {
    Series f = testsup::random_series(rng, ring, d, testsup::xyvars(2), d, 6);
    std::map<VarId, Series> swap;
    swap.emplace(x1, var(ring, d, "x2"));
    swap.emplace(x2, var(ring, d, "x1"));
    Series g = f.substitute(swap);
    CHECK(g.substitute(swap) == f);
    // Against the oracle's rename.
    oracle::OPoly fo = oracle::series_to_opoly(f);
    oracle::OPoly go = fo.rename({{"x1", "x2"}, {"x2", "x1"}});
    CHECK(oracle::opoly_matches_series(g, go));
  }
}

TEST_CASE("substitution: general images with power caching") {
  CoeffRing ring = CoeffRing::integers();
  int d = 4;
  VarId u = var_id("u");
  Series f = var(ring, d, "u").pow(2) + var(ring, d, "u");
  // u -> x1 + y1^2
  Series image = var(ring, d, "x1") + var(ring, d, "y1").pow(2);
  Series g = f.substitute(u, image);
  oracle::OPoly img =
      oracle::OPoly::var("x1") + oracle::OPoly::var("y1") * oracle::OPoly::var("y1");
  oracle::OPoly expect = img * img + img;
  CHECK(oracle::opoly_matches_series(g, expect));
}

TEST_CASE("substitution preconditions") {
  CoeffRing ring = CoeffRing::integers();
  Series f = var(ring, 3, "u");
  // Nonzero constant term in a binding is rejected.
  Series bad = var(ring, 3, "x1") + Series::constant(ring, 3, Rational(1));
  CHECK_THROWS_WITH(f.substitute(var_id("u"), bad),
                    Catch::Matchers::ContainsSubstring("constant term"));
  // Trunc mismatch is rejected.
  Series off = var(ring, 2, "x1");
  CHECK_THROWS_AS(f.substitute(var_id("u"), off), Error);
}

TEST_CASE("invert_unit: constants, unit series, and non-units") {
  CoeffRing ring = CoeffRing::rationals();
  Series two = Series::constant(ring, 4, Rational(2));
  CHECK(two.invert_unit() == Series::constant(ring, 4, Rational(1, 2)));

  CoeffRing rb = CoeffRing::with_beta();
  int d = 5;
  Series one = Series::constant(rb, d, Rational(1));
  Coeff beta = Coeff::generator(rb, 0);
  Series x1 = var(rb, d, "x1");
  Series geom = (one - x1 * beta).invert_unit();
  Series expect = one;
  for (int k = 1; k <= d; ++k)
    expect.add_term(Monomial::variable(indexed_var("x", 1), k),
                    Coeff::generator(rb, 0, k));
  CHECK(geom == expect);

  CHECK_THROWS_WITH(x1.invert_unit(),
                    Catch::Matchers::ContainsSubstring("unit"));
}

TEST_CASE("invert_unit is a two-sided inverse on random units") {
  CoeffRing ring = CoeffRing::with_beta();
  int d = 5;
  std::mt19937 rng(424242);
  Series one = Series::constant(ring, d, Rational(1));
  for (int rep = 0; rep < 20; ++rep) {
    Series f = testsup::random_series(rng, ring, d, testsup::xvars(2), d, 5);
    // Force a nonzero rational constant term so f is a unit.
    Series g = f - Series::constant(ring, d, f.constant_term()) +
               Series::constant(ring, d, Rational(rep % 3 + 1));
    CHECK(g.invert_unit() * g == one);
  }
}

TEST_CASE("exact_divide_linear divides differences of powers") {
  CoeffRing ring = CoeffRing::integers();
  int d = 6;
  Series x1 = var(ring, d, "x1"), x2 = var(ring, d, "x2");
  Series f = x1.pow(3) - x2.pow(3);
  Series q = f.exact_divide_linear(indexed_var("x", 1), indexed_var("x", 2));
  CHECK(q.trunc() == d - 1);
  Series expect = var(ring, d - 1, "x1").pow(2) +
                  var(ring, d - 1, "x1") * var(ring, d - 1, "x2") +
                  var(ring, d - 1, "x2").pow(2);
  CHECK(q == expect);
  // Division by a single variable.
  Series g = (x1 * x2 + x1 * x1).exact_divide_linear(indexed_var("x", 1), {});
  CHECK(g == var(ring, d - 1, "x1") + var(ring, d - 1, "x2"));
}

TEST_CASE("exact_divide_linear reports nonzero remainders") {
  CoeffRing ring = CoeffRing::integers();
  Series f = var(ring, 4, "x1") + Series::constant(ring, 4, Rational(7));
  try {
    f.exact_divide_linear(indexed_var("x", 1), indexed_var("x", 2));
    FAIL("expected DivisionError");
  } catch (const DivisionError& e) {
    // The remainder (7 + x2, here) is part of the message.
    CHECK(std::string(e.what()).find("remainder") != std::string::npos);
    CHECK(std::string(e.what()).find("7") != std::string::npos);
  }
}

TEST_CASE("exact_divide_linear round-trips against multiplication") {
  CoeffRing ring = CoeffRing::with_beta();
  int d = 6;
  std::mt19937 rng(777);
  VarId x1 = indexed_var("x", 1), x2 = indexed_var("x", 2);
  for (int rep = 0; rep < 20; ++rep) {
    Series q0 = testsup::random_series(rng, ring, d - 1, testsup::xyvars(2), d - 2, 5);
    Series divisor = var(ring, d, "x1") - var(ring, d, "x2");
    // Lift q0 to trunc d, multiply, divide back down.
    Series q_at_d(ring, d);
    for (const auto& [m, c] : q0.terms()) q_at_d.add_term(m, c);
    Series f = q_at_d * divisor;
    Series q = f.exact_divide_linear(x1, x2);
    CHECK(q == q0.retrunc(d - 1));
  }
}

TEST_CASE("truncated division stays exact on genuine series") {
  // f = x1/(1 - x2) truncated, times (x1 - x2); dividing back recovers
  // exactly the truncation of x1/(1 - x2) at one order less.
  CoeffRing ring = CoeffRing::rationals();
  int d = 7;
  Series one = Series::constant(ring, d, Rational(1));
  Series x1 = var(ring, d, "x1"), x2 = var(ring, d, "x2");
  Series s = x1 * (one - x2).invert_unit();
  Series f = s * (x1 - x2);
  Series q = f.exact_divide_linear(indexed_var("x", 1), indexed_var("x", 2));
  CHECK(q == s.retrunc(d - 1));
}

TEST_CASE("homogeneity bookkeeping combines monomial and coefficient grades") {
  CoeffRing ring = CoeffRing::with_beta();
  int d = 4;
  Series x1 = var(ring, d, "x1"), y1 = var(ring, d, "y1");
  Coeff beta = Coeff::generator(ring, 0);
  // x1 + y1 + beta*x1*y1 is homogeneous of degree 1 (beta has degree -1).
  Series h = x1 + y1 + (x1 * y1) * beta;
  CHECK(h.homogeneous_degree() == 1);
  Series nh = x1 + x1 * y1;
  CHECK_FALSE(nh.homogeneous_degree().has_value());
  CHECK(h.is_integral());
  CHECK_FALSE((h * Rational(1, 3)).is_integral());
}

TEST_CASE("specialize_beta lands in Z at integer values") {
  CoeffRing rb = CoeffRing::with_beta();
  int d = 3;
  Series x1 = var(rb, d, "x1");
  Coeff beta = Coeff::generator(rb, 0);
  Series f = x1 + (x1 * x1) * beta;
  Series at0 = specialize_beta(f, 0);
  CHECK(at0.ring().kind() == RingKind::integer);
  CHECK(at0.str() == "x1");
  Series atm1 = specialize_beta(f, -1);
  CHECK(atm1.str() == "x1 - x1^2");
}

TEST_CASE("deterministic rendering") {
  CoeffRing ring = CoeffRing::with_beta();
  int d = 3;
  Series x1 = var(ring, d, "x1"), y1 = var(ring, d, "y1");
  Coeff beta = Coeff::generator(ring, 0);
  Series f = -x1 + y1 + (x1 * y1) * (Coeff(1) - beta);
  CHECK(f.str() == "-x1 + y1 + (1 - beta)*x1*y1");
  CHECK(Series::zero(ring, d).str() == "0");
}

TEST_CASE("truncated_product recovers the high-order product from windows") {
  CoeffRing ring = CoeffRing::with_beta();
  // Two constant-term-free series known to order 6; their product is then
  // determined through order 7 (= min(a) + trunc(b) = min(b) + trunc(a)).
  Series x1 = var(ring, 7, "x1"), x2 = var(ring, 7, "x2");
  Coeff beta = Coeff::generator(ring, 0);
  Series a = x1 + (x1 * x1) * beta + (x1 * x1 * x1);
  Series b = x2 - (x2 * x2) + (x1 * x2) * beta;
  Series full = a * b;  // exact through 7 because both inputs are
  CHECK(truncated_product(a.retrunc(6), b.retrunc(6), 7) == full);

  // Requesting more than the windows determine is a hard error.
  CHECK_THROWS_AS(truncated_product(a.retrunc(6), b.retrunc(6), 8), Error);

  // Zero factors are fine at any order.
  CHECK(truncated_product(Series::zero(ring, 2), b, 9).is_zero());

  // A unit factor (lowest degree 0) pins the order to the other's trunc.
  Series one = Series::constant(ring, 3, Rational(1));
  CHECK(truncated_product(one, b.retrunc(3), 3) == b.retrunc(3));
  CHECK_THROWS_AS(truncated_product(one, b.retrunc(3), 4), Error);
}
