// Tests for JSON and LaTeX serialization: round-trips over every coefficient
// ring, byte determinism, and rejection of malformed input.

#include "fgls/series_io.hpp"

#include <catch_amalgamated.hpp>

#include "test_support.hpp"

#include <random>
#include <string>
#include <vector>

using namespace fgls;
using testsup::random_series;
using testsup::xyvars;

TEST_CASE("JSON round-trip over every coefficient ring") {
  std::mt19937 rng(20260816);
  std::vector<CoeffRing> rings = {CoeffRing::integers(), CoeffRing::rationals(),
                                  CoeffRing::with_beta(),
                                  CoeffRing::universal(3)};
  std::vector<VarId> vars = xyvars(2);
  for (const CoeffRing& ring : rings) {
    for (int rep = 0; rep < 10; ++rep) {
      Series f = random_series(rng, ring, 5, vars, 4, 6);
      Series back = series_from_json(series_to_json(f));
      CHECK(back == f);
    }
  }
}

TEST_CASE("JSON output is byte-deterministic and matches the documented shape") {
  CoeffRing ring = CoeffRing::with_beta();
  Series x1 = Series::variable(ring, 3, "x1");
  Series y1 = Series::variable(ring, 3, "y1");
  Coeff beta = Coeff::generator(ring, 0);
  Series f = -x1 + y1 + (x1 * y1) * beta;

  std::string once = series_to_json(f).dump();
  std::string twice = series_to_json(f).dump();
  CHECK(once == twice);
  CHECK(once ==
        R"({"ring":{"kind":"beta"},"trunc":3,"terms":[)"
        R"({"mono":{"x1":1},"coeff":"-1"},)"
        R"({"mono":{"y1":1},"coeff":"1"},)"
        R"({"mono":{"x1":1,"y1":1},"coeff":"beta"}]})");
}

TEST_CASE("weighted symbols survive the JSON round-trip") {
  CoeffRing ring = CoeffRing::integers();
  VarId c2 = var_id("c2", 2);
  Series f = Series::variable(ring, 4, c2) * Series::variable(ring, 4, "z1");
  Json j = series_to_json(f);
  REQUIRE(j.contains("weights"));
  CHECK(j["weights"]["c2"] == 2);
  CHECK(series_from_json(j) == f);
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS_AS(series_from_json(Json::parse(R"({"trunc":3,"terms":[]})")),
                  Error);
  CHECK_THROWS_AS(
      series_from_json(Json::parse(
          R"({"ring":{"kind":"nope"},"trunc":3,"terms":[]})")),
      Error);
  // Term degree beyond the declared truncation order.
  CHECK_THROWS_AS(
      series_from_json(Json::parse(
          R"({"ring":{"kind":"integer"},"trunc":1,)"
          R"("terms":[{"mono":{"x1":2},"coeff":"1"}]})")),
      Error);
  // Stored zero coefficient.
  CHECK_THROWS_AS(
      series_from_json(Json::parse(
          R"({"ring":{"kind":"integer"},"trunc":2,)"
          R"("terms":[{"mono":{"x1":1},"coeff":"0"}]})")),
      Error);
}

TEST_CASE("LaTeX rendering") {
  CoeffRing ring = CoeffRing::with_beta();
  Series x1 = Series::variable(ring, 3, "x1");
  Series y1 = Series::variable(ring, 3, "y1");
  Coeff beta = Coeff::generator(ring, 0);
  Series f = -x1 + y1 + (x1 * y1) * (Coeff(1) - beta);
  CHECK(series_to_latex(f) ==
        "-x_{1} + y_{1} + \\left(1 - \\beta\\right) x_{1} y_{1}");
  CHECK(series_to_latex(Series::zero(ring, 3)) == "0");

  CoeffRing uni = CoeffRing::universal(2);
  Series u = Series::variable(uni, 3, "u");
  Coeff m1 = Coeff::generator(uni, 0);
  Series g = u + (u * u) * (m1 * Rational(-2));
  CHECK(series_to_latex(g) == "u + \\left(-2 m_{1}\\right) u^{2}");
}
