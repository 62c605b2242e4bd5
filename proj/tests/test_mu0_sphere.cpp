#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ltv/mu0_sphere.hpp"

using namespace ltv;

TEST_CASE("majorants g_j") {
  CHECK(g_j(0.0, 1.5, 4) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(g_j(1.0, 1.5, 2) == doctest::Approx(std::pow(2.0, -3.5)).epsilon(1e-14));
  // argmax of g_1 sits at x^2 = 3/(2k+1)
  double k = 1.5;
  double xs = std::sqrt(3.0 / (2.0 * k + 1.0));
  CHECK(g_j(xs, k, 1) > g_j(xs * 0.999, k, 1));
  CHECK(g_j(xs, k, 1) > g_j(xs * 1.001, k, 1));
  CHECK_THROWS_AS(g_j(1.0, 1.5, 5), std::invalid_argument);
}

TEST_CASE("polynomial coefficients, printed closed forms") {
  AppendixCoefficients c = G_coefficients(1.5, CoeffVariant::printed_formula);
  CHECK(std::fabs(c.c_t - 0.4348979) < 5e-6);
  CHECK(std::fabs(c.c_t32 - 1.5843905) < 5e-6);
  CHECK(std::fabs(c.c_t2 - 3.2851383) < 5e-6);
  CHECK(std::fabs(c.c_t52 - 4.0 / 3.0) < 1e-12);
  // grouping factor 2k(k+1)/3 = 5/2 at k = 3/2
  CHECK(c.c_t == doctest::Approx(2.5 * c.G1).epsilon(1e-14));
  CHECK(c.c_t32 == doctest::Approx(2.5 * 3.0 * c.G2).epsilon(1e-14));
  CHECK(c.c_t2 == doctest::Approx(2.5 * 3.0 * c.G3).epsilon(1e-14));
  CHECK(c.c_t52 == doctest::Approx(2.5 * c.G4).epsilon(1e-14));
}

TEST_CASE("polynomial coefficients, tangent-line variant") {
  AppendixCoefficients c = G_coefficients(1.5, CoeffVariant::integral_from_zero);
  CHECK(std::fabs(c.c_t - 0.53168204) < 1e-6);
  CHECK(std::fabs(c.c_t2 - 2.2287797) < 1e-6);
  // from-zero construction always dominates the pure integral
  AppendixCoefficients p = G_coefficients(1.5, CoeffVariant::printed_formula);
  CHECK(c.G1 > p.G1);
  CHECK(c.G4 > p.G4);
}

TEST_CASE("refined coefficients are the hard-coded set, k = 3/2 only") {
  AppendixCoefficients c = G_coefficients(1.5, CoeffVariant::refined);
  CHECK(c.c_t == doctest::Approx(0.5317).epsilon(1e-12));
  CHECK(c.c_t32 == doctest::Approx(0.90074).epsilon(1e-12));
  CHECK(c.c_t2 == doctest::Approx(2.8054).epsilon(1e-12));
  CHECK(c.c_t52 == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK_THROWS_AS(G_coefficients(1.4, CoeffVariant::refined), std::domain_error);
}

TEST_CASE("R evaluates the quarter-power polynomial") {
  AppendixCoefficients c = G_coefficients(1.5, CoeffVariant::refined);
  double t = 0.04;
  double st = std::sqrt(t);
  double expect = c.c_t * t + c.c_t32 * t * st + c.c_t2 * t * t +
                  c.c_t52 * t * t * st;
  CHECK(c.R(t) == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("left side") {
  CHECK(std::fabs(left_side(0.01, 1.5, false) - 0.0097) < 1e-4);
  CHECK(left_side(0.01, 1.5, false) ==
        doctest::Approx(0.01 - 3.0 * 0.01 * 0.01).epsilon(1e-14));
  CHECK(std::fabs(left_side(0.0387, 1.5, false) - 0.0342069) < 1e-6);
  // exact antiderivative dominates the crude quadratic lower bound
  for (double t = 0.005; t <= 0.1; t += 0.005)
    CHECK(left_side(t, 1.5, true) >= left_side(t, 1.5, false));
  CHECK_THROWS_AS(left_side(0.5, 1.5, false), std::domain_error);
  CHECK_THROWS_AS(left_side(0.0, 1.5, true), std::domain_error);
}

TEST_CASE("threshold roots per variant") {
  Mu0Result a = solve_t0(1.5, CoeffVariant::printed_formula, false);
  CHECK(std::fabs(a.t0 - 0.0387028061882) < 1e-9);
  CHECK(std::fabs(a.mu0 - 5.08310138989) < 1e-7);
  CHECK(a.mu0 == doctest::Approx(1.0 / std::sqrt(a.t0)).epsilon(1e-14));
  CHECK(a.certificate);

  Mu0Result b = solve_t0(1.5, CoeffVariant::integral_from_zero, false);
  CHECK(std::fabs(b.t0 - 0.0329956210122) < 1e-9);
  CHECK(std::fabs(b.mu0 - 5.50518409736) < 1e-7);
  CHECK(b.certificate);

  Mu0Result c = solve_t0(1.5, CoeffVariant::refined, true);
  CHECK(std::fabs(c.t0 - 0.0698452997979) < 1e-9);
  CHECK(std::fabs(c.mu0 - 3.78382817833) < 1e-7);
  CHECK(c.certificate);
}

TEST_CASE("variant names round-trip") {
  for (CoeffVariant v : {CoeffVariant::printed_formula,
                         CoeffVariant::integral_from_zero, CoeffVariant::refined})
    CHECK(variant_from_name(variant_name(v)) == v);
  CHECK_THROWS_AS(variant_from_name("bogus"), std::invalid_argument);
}
