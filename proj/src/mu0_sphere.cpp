#include "ltv/mu0_sphere.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ltv/numerics.hpp"
#include "ltv/spectral_sums.hpp"

namespace ltv {

std::string variant_name(CoeffVariant v) {
  switch (v) {
    case CoeffVariant::printed_formula: return "printed_formula";
    case CoeffVariant::integral_from_zero: return "integral_from_zero";
    case CoeffVariant::refined: return "refined";
  }
  return "?";
}

CoeffVariant variant_from_name(const std::string& s) {
  if (s == "printed_formula") return CoeffVariant::printed_formula;
  if (s == "integral_from_zero") return CoeffVariant::integral_from_zero;
  if (s == "refined") return CoeffVariant::refined;
  throw std::invalid_argument("unknown coefficient variant: " + s);
}

double AppendixCoefficients::R(double t) const {
  double rt = std::sqrt(t);
  return t * (c_t + rt * (c_t32 + rt * (c_t2 + rt * c_t52)));
}

double g_j(double x, double k, int j) {
  if (!(x >= 0.0)) throw std::domain_error("g_j: x must be >= 0");
  if (j < 1 || j > 4) throw std::invalid_argument("g_j: j must be 1..4");
  return std::pow(x, 4 - j) * std::pow(x * x + 1.0, -(k + 2.0));
}

namespace {

void require_k(double k) {
  if (!(k > 1.0) || !(k < 2.0)) throw std::domain_error("k must lie in (1,2)");
}

AppendixCoefficients finish(double k, CoeffVariant v, double G1, double G2,
                            double G3, double G4) {
  AppendixCoefficients c;
  c.k = k;
  c.variant = v;
  c.G1 = G1;
  c.G2 = G2;
  c.G3 = G3;
  c.G4 = G4;
  double p = 2.0 * k * (k + 1.0) / 3.0;
  c.c_t = p * G1;
  c.c_t32 = p * 3.0 * G2;
  c.c_t2 = p * 3.0 * G3;
  c.c_t52 = p * G4;
  return c;
}

}  // namespace

AppendixCoefficients G_coefficients(double k, CoeffVariant variant) {
  require_k(k);
  switch (variant) {
    case CoeffVariant::printed_formula: {
      double G1 = 9.0 * std::pow(2.0 * k + 1.0, k) / std::pow(2.0 * k + 4.0, k + 2.0) +
                  (5.0 * k + 4.0) * std::pow(2.0 * k + 1.0, k) /
                      (2.0 * k * (k + 1.0) * std::pow(2.0 * k + 4.0, k + 1.0));
      double G2 = std::pow(k + 1.0, k + 0.5) / std::pow(k + 2.0, k + 2.0) +
                  0.5 * std::exp(log_gamma(1.5) + log_gamma(k + 0.5) - log_gamma(k + 2.0));
      double G3 = std::pow(2.0 * k + 3.0, k + 1.5) / std::pow(2.0 * k + 4.0, k + 2.0) +
                  0.5 / (k + 1.0);
      double G4 = 0.5 * std::exp(log_gamma(0.5) + log_gamma(k + 1.5) - log_gamma(k + 2.0));
      return finish(k, variant, G1, G2, G3, G4);
    }
    case CoeffVariant::integral_from_zero: {
      double G[4];
      for (int j = 1; j <= 4; ++j) {
        // argmax of x^{4-j} (x^2+1)^{-(k+2)} is at x^2 = (4-j)/(2k+j)
        double xj = std::sqrt((4.0 - j) / (2.0 * k + j));
        double sup = xj * g_j(xj, k, j);
        double integral = integrate_adaptive(
            [k, j](double x) { return g_j(x, k, j); }, 0.0,
            std::numeric_limits<double>::infinity(), 1e-11);
        G[j - 1] = sup + integral;
      }
      return finish(k, variant, G[0], G[1], G[2], G[3]);
    }
    case CoeffVariant::refined: {
      if (std::fabs(k - 1.5) > 1e-12)
        throw std::domain_error("refined coefficients are tabulated at k = 3/2 only");
      // published second coefficient set for R_{3/2}; stored as polynomial
      // coefficients, G_j recovered through the same grouping factor
      AppendixCoefficients c;
      c.k = k;
      c.variant = variant;
      c.c_t = 0.5317;
      c.c_t32 = 0.90074;
      c.c_t2 = 2.8054;
      c.c_t52 = 4.0 / 3.0;
      double p = 2.0 * k * (k + 1.0) / 3.0;
      c.G1 = c.c_t / p;
      c.G2 = c.c_t32 / (3.0 * p);
      c.G3 = c.c_t2 / (3.0 * p);
      c.G4 = c.c_t52 / p;
      return c;
    }
  }
  throw std::logic_error("G_coefficients: bad variant");
}

double left_side(double t, double k, bool exact) {
  require_k(k);
  if (!(t > 0.0) || !(t < 1.0 / (2.0 * k)))
    throw std::domain_error("left_side: t must lie in (0, 1/(2k))");
  if (!exact) return t - 2.0 * k * t * t;
  double u = 2.0 * t + 1.0;
  return (std::pow(u, 1.0 - k) - 1.0) / (1.0 - k) - t * std::pow(u, -k);
}

Mu0Result solve_t0(double k, CoeffVariant variant, bool exact_left) {
  require_k(k);
  AppendixCoefficients c = G_coefficients(k, variant);
  auto diff = [&](double t) { return left_side(t, k, exact_left) - c.R(t); };
  const double t_hi = 1.0 / (2.0 * k) - 1e-9;
  const double step = 1e-4;
  double prev_t = 1e-6;
  if (diff(prev_t) <= 0.0)
    throw std::runtime_error("solve_t0: comparison already negative near t = 0");
  double lo = 0.0, hi = 0.0;
  for (double t = step; t < t_hi; t += step) {
    if (diff(t) <= 0.0) {
      lo = prev_t;
      hi = t;
      break;
    }
    prev_t = t;
  }
  if (hi == 0.0) throw std::runtime_error("solve_t0: no sign change below 1/(2k)");
  Mu0Result res;
  res.variant = variant;
  res.t0 = find_root(diff, {lo, hi, 1e-13});
  res.mu0 = 1.0 / std::sqrt(res.t0);
  res.certificate =
      verify_on_interval(Domain::Sphere2, k, res.mu0 + 0.01, 0.01, 0.0).passed;
  return res;
}

}  // namespace ltv
