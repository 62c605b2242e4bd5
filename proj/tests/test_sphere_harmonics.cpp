#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "ltv/sphere_harmonics.hpp"

using namespace ltv;

namespace {

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (t * p1 - p0) / (t * t - 1.0);
      double dt = p1 / dp;
      t -= dt;
      if (std::fabs(dt) < 1e-15) {
        w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
        break;
      }
    }
    x[i] = t;
  }
}

}  // namespace

TEST_CASE("eigenvalue tables") {
  auto s2 = eigen_table(3, 3);
  REQUIRE(s2.size() == 3);
  CHECK(s2[0] == std::make_pair<std::int64_t, std::int64_t>(2, 3));
  CHECK(s2[1] == std::make_pair<std::int64_t, std::int64_t>(6, 5));
  CHECK(s2[2] == std::make_pair<std::int64_t, std::int64_t>(12, 7));

  auto s3 = eigen_table(4, 2);
  CHECK(s3[0] == std::make_pair<std::int64_t, std::int64_t>(3, 4));
  CHECK(s3[1] == std::make_pair<std::int64_t, std::int64_t>(8, 9));

  auto s1 = eigen_table(2, 4);
  for (int n = 1; n <= 4; ++n) {
    CHECK(s1[n - 1].first == std::int64_t(n) * n);
    CHECK(s1[n - 1].second == 2);
  }

  // general-m branch: S^4 multiplicities 5, 14 from the binomial formula
  auto s4 = eigen_table(5, 2);
  CHECK(s4[0] == std::make_pair<std::int64_t, std::int64_t>(4, 5));
  CHECK(s4[1] == std::make_pair<std::int64_t, std::int64_t>(10, 14));

  CHECK_THROWS_AS(eigen_table(1, 3), std::invalid_argument);
}

TEST_CASE("first shell at the pole") {
  // n = 1: Y values at theta = 0 sum of squares = 3/(4 pi)
  HarmonicShell s = eval_shell(1, {0.0, 0.3});
  double q = 0.0;
  for (double v : s.values) q += v * v;
  CHECK(q == doctest::Approx(3.0 / (4.0 * M_PI)).epsilon(1e-14));
}

TEST_CASE("addition and gradient identities at random points") {
  std::mt19937 rng(101);
  std::uniform_real_distribution<double> ut(0.0, M_PI), up(0.0, 2.0 * M_PI);
  std::uniform_int_distribution<int> un(1, 12);
  for (int rep = 0; rep < 100; ++rep) {
    SpherePoint p{ut(rng), up(rng)};
    int n = un(rng);
    CHECK(addition_identity_residual(n, p) <= 1e-9);
    CHECK(gradient_identity_residual(n, p) <= 1e-8);
  }
}

TEST_CASE("identities hold at and near the poles") {
  for (double theta : {0.0, 1e-9, M_PI}) {
    SpherePoint p{theta, 1.234};
    CHECK(addition_identity_residual(12, p) <= 1e-9);
    CHECK(gradient_identity_residual(12, p) <= 1e-8);
  }
}

TEST_CASE("shells are orthonormal under product quadrature") {
  // 64-point Gauss-Legendre in cos(theta) x 128 uniform points in phi is
  // exact (up to roundoff) for polynomials of the degrees involved
  std::vector<double> gx, gw;
  gauss_legendre(64, gx, gw);
  const int nphi = 128;
  const int nmax = 8;
  // flatten shells 1..nmax into one basis list per quadrature node
  int dim = 0;
  for (int n = 1; n <= nmax; ++n) dim += 2 * n + 1;
  std::vector<double> gram(dim * dim, 0.0);
  for (int iq = 0; iq < 64; ++iq) {
    double theta = std::acos(gx[iq]);
    for (int ip = 0; ip < nphi; ++ip) {
      double phi = 2.0 * M_PI * ip / nphi;
      std::vector<double> row;
      row.reserve(dim);
      for (int n = 1; n <= nmax; ++n) {
        HarmonicShell s = eval_shell(n, {theta, phi});
        row.insert(row.end(), s.values.begin(), s.values.end());
      }
      double wq = gw[iq] * (2.0 * M_PI / nphi);
      for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) gram[i * dim + j] += wq * row[i] * row[j];
    }
  }
  double worst = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      double expect = (i == j) ? 1.0 : 0.0;
      worst = std::max(worst, std::fabs(gram[i * dim + j] - expect));
    }
  CHECK(worst <= 1e-8);
}

TEST_CASE("shell ratio") {
  CHECK(shell_ratio(1) == doctest::Approx(3.0 / (8.0 * M_PI)).epsilon(1e-12));
  CHECK(std::fabs(shell_ratio(20) * 2.0 * M_PI - 1.0) < 0.08);
  double prev = 0.0;
  for (int n0 = 1; n0 <= 40; ++n0) {
    double r = shell_ratio(n0);
    CHECK(r > prev);
    CHECK(r < 1.0 / (2.0 * M_PI));
    prev = r;
  }
}
