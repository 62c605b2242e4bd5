#include "ltv/sphere_harmonics.hpp"

#include <cmath>
#include <stdexcept>

namespace ltv {

std::vector<std::pair<std::int64_t, std::int64_t>> eigen_table(int m, int n_max) {
  if (m < 2) throw std::invalid_argument("eigen_table: m must be >= 2");
  if (n_max < 1) throw std::invalid_argument("eigen_table: n_max must be >= 1");
  std::vector<std::pair<std::int64_t, std::int64_t>> t;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    std::int64_t lambda = n * (n + m - 2);
    std::int64_t mult;
    if (m == 2) {
      mult = 2;
    } else if (m == 3) {
      mult = 2 * n + 1;
    } else if (m == 4) {
      mult = (n + 1) * (n + 1);
    } else {
      // ((2n+m-2)/n) C(n+m-3, n-1), computed as C(n+m-1,n) - C(n+m-3,n-2)
      // to stay in integers
      auto binom = [](std::int64_t a, std::int64_t b) {
        if (b < 0 || b > a) return static_cast<std::int64_t>(0);
        std::int64_t r = 1;
        for (std::int64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
      };
      mult = binom(n + m - 1, n) - binom(n + m - 3, n - 2);
    }
    t.emplace_back(lambda, mult);
  }
  return t;
}

namespace {

constexpr int kMaxDegree = 64;

// P[q][m] = normalized associated Legendre P_q^m(cos theta), no phase factor,
// int_{-1}^{1} P^2 dx = 1; triangular table up to degree n.
std::vector<std::vector<double>> legendre_table(int n, double x, double s) {
  std::vector<std::vector<double>> P(n + 1);
  for (int q = 0; q <= n; ++q) P[q].assign(q + 1, 0.0);
  P[0][0] = std::sqrt(0.5);
  for (int m = 1; m <= n; ++m)
    P[m][m] = std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * s * P[m - 1][m - 1];
  for (int m = 0; m < n; ++m)
    P[m + 1][m] = std::sqrt(2.0 * m + 3.0) * x * P[m][m];
  for (int m = 0; m <= n; ++m)
    for (int q = m + 2; q <= n; ++q) {
      double a = std::sqrt((4.0 * q * q - 1.0) /
                           (static_cast<double>(q) * q - static_cast<double>(m) * m));
      double b = std::sqrt((static_cast<double>(q - 1) * (q - 1) - static_cast<double>(m) * m) /
                           (4.0 * static_cast<double>(q - 1) * (q - 1) - 1.0));
      P[q][m] = a * (x * P[q - 1][m] - b * P[q - 2][m]);
    }
  return P;
}

}  // namespace

HarmonicShell eval_shell(int n, SpherePoint p) {
  if (n < 1 || n > kMaxDegree)
    throw std::invalid_argument("eval_shell: degree out of supported range");
  const double x = std::cos(p.theta), s = std::sin(p.theta);
  auto P = legendre_table(n, x, s);

  auto Pnm = [&](int q, int m) {
    return (m >= 0 && m <= q) ? P[q][m] : 0.0;
  };
  // d/dtheta of the normalized P_n^m
  auto dP = [&](int m) {
    if (m == 0) return -std::sqrt(n * (n + 1.0)) * Pnm(n, 1);
    return 0.5 * (std::sqrt(static_cast<double>(n + m) * (n - m + 1)) * Pnm(n, m - 1) -
                  std::sqrt(static_cast<double>(n - m) * (n + m + 1)) * Pnm(n, m + 1));
  };
  // (m / sin theta) P_n^m via the degree-lowering ladder (pole-regular)
  auto mOverSin = [&](int m) {
    double r = std::sqrt((2.0 * n + 1.0) / (2.0 * n - 1.0));
    double t1 = std::sqrt(static_cast<double>(n + m) * (n + m - 1)) * Pnm(n - 1, m - 1);
    double t2 = (n - m >= 2)
                    ? std::sqrt(static_cast<double>(n - m) * (n - m - 1)) * Pnm(n - 1, m + 1)
                    : 0.0;
    return 0.5 * r * (t1 + t2);
  };

  HarmonicShell sh;
  sh.n = n;
  sh.values.reserve(2 * n + 1);
  sh.grad_theta.reserve(2 * n + 1);
  sh.grad_phi.reserve(2 * n + 1);

  const double c0 = 1.0 / std::sqrt(2.0 * M_PI);
  sh.values.push_back(Pnm(n, 0) * c0);
  sh.grad_theta.push_back(dP(0) * c0);
  sh.grad_phi.push_back(0.0);

  const double c1 = 1.0 / std::sqrt(M_PI);
  for (int m = 1; m <= n; ++m) {
    double cm = std::cos(m * p.phi), sm = std::sin(m * p.phi);
    double v = Pnm(n, m), dv = dP(m), q = mOverSin(m);
    sh.values.push_back(v * cm * c1);
    sh.grad_theta.push_back(dv * cm * c1);
    sh.grad_phi.push_back(-q * sm * c1);
    sh.values.push_back(v * sm * c1);
    sh.grad_theta.push_back(dv * sm * c1);
    sh.grad_phi.push_back(q * cm * c1);
  }
  return sh;
}

double addition_identity_residual(int n, SpherePoint p) {
  HarmonicShell sh = eval_shell(n, p);
  double s = 0.0;
  for (double v : sh.values) s += v * v;
  return std::fabs(s - (2.0 * n + 1.0) / (4.0 * M_PI));
}

double gradient_identity_residual(int n, SpherePoint p) {
  HarmonicShell sh = eval_shell(n, p);
  double s = 0.0;
  for (size_t i = 0; i < sh.values.size(); ++i)
    s += sh.grad_theta[i] * sh.grad_theta[i] + sh.grad_phi[i] * sh.grad_phi[i];
  return std::fabs(s - n * (n + 1.0) * (2.0 * n + 1.0) / (4.0 * M_PI));
}

double shell_ratio(int n0) {
  if (n0 < 1) throw std::invalid_argument("shell_ratio: n0 must be >= 1");
  double N = static_cast<double>(n0) * (n0 + 2.0);
  double denom = 0.0;
  for (int n = 1; n <= n0; ++n)
    denom += (2.0 * n + 1.0) * n * (n + 1.0);
  return (N * N / (4.0 * M_PI)) / denom;
}

}  // namespace ltv
