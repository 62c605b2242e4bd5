#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "ltv/lt_constants.hpp"

using namespace ltv;

TEST_CASE("semiclassical constants") {
  CHECK(classical_L(1.0, 2) == doctest::Approx(1.0 / (8.0 * M_PI)).epsilon(1e-14));
  CHECK(classical_L(1.5, 1) == doctest::Approx(0.1875).epsilon(1e-14));
  // Gamma(1) / (2 sqrt(pi) Gamma(3/2)) = 1/pi
  CHECK(classical_L(0.0, 1) == doctest::Approx(1.0 / M_PI).epsilon(1e-12));
  CHECK_THROWS_AS(classical_L(-0.5, 2), std::domain_error);
  CHECK(best_known_factor() == doctest::Approx(M_PI / std::sqrt(3.0)).epsilon(1e-15));
}

TEST_CASE("2d trace constant") {
  CHECK(trace_constant_2d(1.5) == doctest::Approx(0.375).epsilon(1e-13));
  CHECK(vector_constant_2d() == doctest::Approx(0.75).epsilon(1e-13));
  auto [kstar, lstar] = optimize_trace_constant_2d();
  CHECK(std::fabs(kstar - 1.38449665761) < 1e-6);
  CHECK(std::fabs(lstar - 0.36039689563) < 1e-9);
  CHECK(lstar < trace_constant_2d(1.5));
  CHECK_THROWS_AS(trace_constant_2d(1.0), std::domain_error);
  CHECK_THROWS_AS(trace_constant_2d(2.0), std::domain_error);
}

TEST_CASE("trace constant convexity in k on the sampled grid") {
  // single interior minimum: margins decrease then increase
  auto [kstar, lstar] = optimize_trace_constant_2d();
  (void)lstar;
  double prev = trace_constant_2d(1.06);
  bool decreasing = true;
  for (double k = 1.08; k <= 1.94 + 1e-12; k += 0.02) {
    double v = trace_constant_2d(k);
    if (decreasing && v > prev) {
      decreasing = false;
      CHECK(std::fabs(prev - lstar) < 1e-3);
      CHECK(std::fabs((k - 0.04) - kstar) < 0.03);
    } else if (!decreasing) {
      CHECK(v > prev);
    }
    prev = v;
  }
  CHECK_FALSE(decreasing);
}

TEST_CASE("inner integral closed form vs quadrature") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> uk(1.1, 1.9), ut(0.1, 0.9), uv(0.2, 5.0);
  for (int rep = 0; rep < 10; ++rep) {
    double k = uk(rng), t = ut(rng), V = uv(rng);
    auto [closed, quad] = inner_integral_check(k, t, V);
    CHECK(std::fabs(closed - quad) <= 1e-7 * closed);
  }
  // quadratic scaling in V
  auto [c1, q1] = inner_integral_check(1.5, 0.4, 1.0);
  auto [c2, q2] = inner_integral_check(1.5, 0.4, 2.0);
  CHECK(c2 / c1 == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(q2 / q1 == doctest::Approx(4.0).epsilon(1e-6));
  // t^{1-k} (1-t)^{k-2} is minimized at t = k - 1
  double k = 1.5;
  auto best = inner_integral_check(k, k - 1.0, 1.0).first;
  CHECK(best < inner_integral_check(k, k - 1.0 + 0.05, 1.0).first);
  CHECK(best < inner_integral_check(k, k - 1.0 - 0.05, 1.0).first);
  CHECK_THROWS_AS(inner_integral_check(1.5, 1.0, 1.0), std::domain_error);
}

TEST_CASE("k_n from L1") {
  CHECK(k_from_L(0.375, 2) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(k_from_L(classical_L(1.0, 2), 2) ==
        doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-13));
  // n = 2 reduces to 4 L1 for any L1
  CHECK(k_from_L(0.123, 2) == doctest::Approx(4.0 * 0.123).epsilon(1e-13));
  CHECK_THROWS_AS(k_from_L(-1.0, 2), std::domain_error);
}

TEST_CASE("3d constants") {
  Constants3D c = constants_3d();
  CHECK(std::fabs(c.integral_factor - 32.0 / 15.0) < 1e-9);
  CHECK(c.L_T3 == doctest::Approx(4.0 / (15.0 * M_PI)).epsilon(1e-15));
  CHECK(std::fabs(c.L_T3 - 0.08488) < 5e-6);
  CHECK(c.L_S3 == doctest::Approx(1.01390932502 * c.L_T3).epsilon(1e-9));
}

TEST_CASE("sampling constants c(l) and K(l)") {
  CHECK(taikov_c(1.0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(taikov_c(2.0) == doctest::Approx(std::pow(4.0 / 27.0, 0.25)).epsilon(1e-13));
  CHECK(zelik_K(1) == doctest::Approx(1.0 / M_PI).epsilon(1e-15));
  CHECK(zelik_K(2) == doctest::Approx(2.0 / (3.0 * M_PI)).epsilon(1e-15));
  CHECK_THROWS_AS(zelik_K(3), std::invalid_argument);
  CHECK_THROWS_AS(taikov_c(0.5), std::domain_error);
}

TEST_CASE("two-term constants") {
  TwoTermConstants t1 = two_term_constants(1, 2.0 * M_PI);
  CHECK(t1.trace_coeff ==
        doctest::Approx(2.0 / (3.0 * std::sqrt(3.0))).epsilon(1e-13));
  CHECK(t1.count_coeff == doctest::Approx(1.0 / (M_PI * M_PI)).epsilon(1e-13));
  // halving the period doubles K_L, scaling the count coefficient by 2^{2l}
  TwoTermConstants th = two_term_constants(1, M_PI);
  CHECK(th.count_coeff == doctest::Approx(4.0 * t1.count_coeff).epsilon(1e-13));
  CHECK(th.trace_coeff == doctest::Approx(t1.trace_coeff).epsilon(1e-15));
  TwoTermConstants t2 = two_term_constants(2, 2.0 * M_PI);
  CHECK(t2.trace_coeff ==
        doctest::Approx(4.0 / std::pow(5.0, 1.25) * taikov_c(2.0)).epsilon(1e-13));
  CHECK_THROWS_AS(two_term_constants(1, 0.0), std::domain_error);
}

TEST_CASE("constants table is internally consistent") {
  auto table = constants_table();
  CHECK(table.size() >= 15);
  int with_ref = 0;
  for (const auto& e : table) {
    CHECK_FALSE(e.name.empty());
    CHECK_FALSE(e.formula.empty());
    CHECK(std::isfinite(e.value));
    if (e.has_reference) {
      ++with_ref;
      CHECK(std::fabs(e.value - e.reference_value) <= e.tolerance);
    }
  }
  CHECK(with_ref >= 12);
}
