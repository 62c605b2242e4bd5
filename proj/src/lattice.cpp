#include "ltv/lattice.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "ltv/numerics.hpp"

namespace ltv {

std::int64_t LatticeSpectrum::counting(std::int64_t lambda) const {
  std::int64_t n = 0;
  for (const auto& [l, c] : shells) {
    if (l > lambda) break;
    n += c;
  }
  return n;
}

std::int64_t LatticeSpectrum::total_points() const {
  std::int64_t n = 0;
  for (const auto& [l, c] : shells) n += c;
  return n;
}

LatticeSpectrum enumerate_lattice(int dim, std::int64_t lambda_max) {
  if (dim != 2 && dim != 3) throw std::invalid_argument("enumerate_lattice: dim must be 2 or 3");
  if (lambda_max < 1) throw std::invalid_argument("enumerate_lattice: lambda_max must be >= 1");
  const std::int64_t cap = (dim == 2) ? 40'000'000 : 300'000;
  if (lambda_max > cap)
    throw std::length_error("enumerate_lattice: lambda_max exceeds budget, cap is " +
                            std::to_string(cap));

  std::vector<std::uint32_t> count(static_cast<size_t>(lambda_max) + 1, 0);
  const std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(lambda_max)));
  if (dim == 2) {
    for (std::int64_t m1 = -r; m1 <= r; ++m1) {
      std::int64_t q1 = m1 * m1;
      std::int64_t r2 = static_cast<std::int64_t>(std::sqrt(static_cast<double>(lambda_max - q1)));
      while ((r2 + 1) * (r2 + 1) + q1 <= lambda_max) ++r2;
      while (r2 * r2 + q1 > lambda_max) --r2;
      for (std::int64_t m2 = -r2; m2 <= r2; ++m2) {
        std::int64_t q = q1 + m2 * m2;
        if (q > 0) ++count[q];
      }
    }
  } else {
    for (std::int64_t m1 = -r; m1 <= r; ++m1) {
      std::int64_t q1 = m1 * m1;
      for (std::int64_t m2 = -r; m2 <= r; ++m2) {
        std::int64_t q2 = q1 + m2 * m2;
        if (q2 > lambda_max) continue;
        std::int64_t r3 = static_cast<std::int64_t>(std::sqrt(static_cast<double>(lambda_max - q2)));
        while ((r3 + 1) * (r3 + 1) + q2 <= lambda_max) ++r3;
        while (r3 > 0 && r3 * r3 + q2 > lambda_max) --r3;
        for (std::int64_t m3 = -r3; m3 <= r3; ++m3) {
          std::int64_t q = q2 + m3 * m3;
          if (q > 0 && q <= lambda_max) ++count[q];
        }
      }
    }
  }
  LatticeSpectrum sp;
  sp.dim = dim;
  sp.lambda_max = lambda_max;
  for (std::int64_t l = 1; l <= lambda_max; ++l)
    if (count[l] > 0) sp.shells.emplace_back(l, count[l]);
  return sp;
}

CountingReport check_counting_bounds(const LatticeSpectrum& sp) {
  CountingReport rep;
  rep.min_ratio_lambda_j_over_j = 1e300;
  rep.min_ratio_lambda_j_over_j4 = 1e300;
  std::int64_t j = 0;
  for (const auto& [l, c] : sp.shells) {
    j += c;  // after this shell, j = N(l)
    double nl = static_cast<double>(j);
    double ld = static_cast<double>(l);
    rep.max_ratio_N_over_lambda = std::max(rep.max_ratio_N_over_lambda, nl / ld);
    // last index on this shell is the binding one for lambda_j >= j/c checks
    rep.min_ratio_lambda_j_over_j = std::min(rep.min_ratio_lambda_j_over_j, ld * 8.0 / nl);
    rep.min_ratio_lambda_j_over_j4 = std::min(rep.min_ratio_lambda_j_over_j4, ld * 4.0 / nl);
  }
  rep.passed = rep.max_ratio_N_over_lambda <= 8.0 &&
               rep.min_ratio_lambda_j_over_j >= 1.0 &&
               rep.min_ratio_lambda_j_over_j4 >= 1.0;
  return rep;
}

namespace {

// integral comparison for the chain: sum_{j>J} e^{-2L sqrt j}
//   <= int_J^inf e^{-2L sqrt x} dx = e^{-2L sqrt J} (2 L sqrt J + 1) / (2 L^2)
double chain_integral_tail(double L, double J) {
  double s = std::sqrt(J);
  return std::exp(-2.0 * L * s) * (2.0 * L * s + 1.0) / (2.0 * L * L);
}

}  // namespace

CertifiedValue exp_tail_2d(double mu, double tol) {
  if (!(mu > 0.0)) throw std::domain_error("exp_tail_2d: mu must be positive");
  if (!(tol > 0.0)) throw std::domain_error("exp_tail_2d: tol must be positive");
  const double L = M_PI * mu / (2.0 * std::sqrt(2.0));
  std::int64_t lambda_max = 64;
  for (;;) {
    LatticeSpectrum sp = enumerate_lattice(2, lambda_max);
    double J = static_cast<double>(sp.total_points());
    double cert = 2.0 * M_PI * chain_integral_tail(L, J);
    if (cert <= tol || lambda_max >= 40'000'000) {
      double s = 0.0;
      for (auto it = sp.shells.rbegin(); it != sp.shells.rend(); ++it)
        s += static_cast<double>(it->second) *
             std::exp(-2.0 * M_PI * mu * std::sqrt(static_cast<double>(it->first)));
      if (cert > tol) throw accuracy_error{2.0 * M_PI * s, cert};
      return {2.0 * M_PI * s, cert, sp.total_points()};
    }
    lambda_max *= 4;
  }
}

double exp_tail_2d_chain_bound(double mu, bool sharp) {
  // sum_j e^{-a sqrt j} <= e^{-a/2} sum_j e^{-(a/2) sqrt j}
  //                     <= e^{-a/2} int_0^inf e^{-(a/2) sqrt x} dx
  //                      = 8 e^{-a/2} / a^2,
  // a = pi mu (sharp chain, lambda_j >= j/4) or pi mu / sqrt 2 (crude, j/8);
  // overall factor 2 pi from the series being compared.
  double a = sharp ? M_PI * mu : M_PI * mu / std::sqrt(2.0);
  return 16.0 * M_PI * std::exp(-0.5 * a) / (a * a);
}

std::pair<double, double> torus2_mu0() {
  double crude = 2.0 * std::sqrt(2.0) / M_PI * std::log(32.0 / M_PI);
  double sharp = 2.0 / M_PI * std::log(16.0 / M_PI);
  return {crude, sharp};
}

double fourier_decay_bound(double k, double a) {
  if (!(a > 0.0) || !(a < std::sqrt(2.0) / 2.0))
    throw std::domain_error("fourier_decay_bound: a must lie in (0, sqrt2/2)");
  if (!(k > 1.0) || !(k < 2.0))
    throw std::domain_error("fourier_decay_bound: k must lie in (1,2)");
  return 1.0 / (2.0 * (k - 1.0) * std::pow(1.0 - 2.0 * a * a, k - 1.0));
}

double general_k_mu0(double k) {
  if (!(k > 1.0) || !(k < 2.0))
    throw std::domain_error("general_k_mu0: k must lie in (1,2)");
  // The enveloped correction is bounded by 2pi C(k,a) sum' e^{-2 pi mu a |m|},
  // and the sharp (j/4) chain gives 16 C(k,a) e^{-pi mu a / 2} / (pi a^2 mu^2),
  // so 2pi sum' |f_hat| < 1/mu^2 holds once
  //   mu >= (2 / (pi a)) log(16 C(k,a) / (pi a^2)).
  double best = 1e300;
  for (double a = 0.05; a < std::sqrt(2.0) / 2.0 - 1e-9; a += 0.005) {
    double c = fourier_decay_bound(k, a);
    double arg = 16.0 * c / (M_PI * a * a);
    if (arg <= 1.0) continue;
    double mu0 = 2.0 / (M_PI * a) * std::log(arg);
    best = std::min(best, mu0);
  }
  return best;
}

std::pair<double, double> fourier_check_1d(double xi) {
  xi = std::fabs(xi);
  const double X = 600.0;
  auto f = [xi](double x) { return std::cos(x * xi) / (1.0 + x * x); };
  double head = integrate_adaptive(f, 0.0, X, 1e-11);
  double tail;
  if (xi < 1e-12) {
    tail = M_PI / 2.0 - std::atan(X);
  } else {
    // two integrations by parts; the dropped remainder is
    // <= int_X^inf |f''| / xi^2 = O(1/(X^3 xi^2)) ~ 1e-8 at X=600, xi>=1
    double fX = 1.0 / (1.0 + X * X);
    double dfX = -2.0 * X / ((1.0 + X * X) * (1.0 + X * X));
    tail = -std::sin(X * xi) * fX / xi - std::cos(X * xi) * dfX / (xi * xi);
  }
  double quadrature = 2.0 * (head + tail);
  double closed = M_PI * std::exp(-xi);
  return {quadrature, closed};
}

}  // namespace ltv
