#pragma once

#include <string>

// Sphere threshold derivation: majorants g_j, the coefficient sets G1..G4 of
// the comparison polynomial R_k(t), the left-side function L_k(t) and the
// first crossing t0 with mu0 = t0^{-1/2}.
//
// The literature prints two mutually inconsistent coefficient sets for the
// t-coefficient, so the sets are exposed as explicit variants and never
// silently merged; each variant's mu0 is backed by its own end-to-end grid
// certificate, which is the fact the suite actually relies on.

namespace ltv {

enum class CoeffVariant { printed_formula, integral_from_zero, refined };

std::string variant_name(CoeffVariant v);
CoeffVariant variant_from_name(const std::string& s);

struct AppendixCoefficients {
  double k = 0.0;
  double G1 = 0.0, G2 = 0.0, G3 = 0.0, G4 = 0.0;
  // R_k(t) = c_t t + c_t32 t^{3/2} + c_t2 t^2 + c_t52 t^{5/2},
  // (c_t, c_t32, c_t2, c_t52) = (2k(k+1)/3) * (G1, 3 G2, 3 G3, G4)
  double c_t = 0.0, c_t32 = 0.0, c_t2 = 0.0, c_t52 = 0.0;
  CoeffVariant variant = CoeffVariant::printed_formula;

  double R(double t) const;
};

struct Mu0Result {
  double t0 = 0.0;
  double mu0 = 0.0;  // = t0^{-1/2}
  CoeffVariant variant = CoeffVariant::printed_formula;
  bool certificate = false;  // grid sweep on [0, mu0 + 0.01] passed
};

// g_j(x) = x^{4-j} / (x^2+1)^{k+2}, j = 1..4.
double g_j(double x, double k, int j);

// printed_formula: the four displayed closed forms.
// integral_from_zero: G_j = x_j g_j(x_j) + int_0^inf g_j (quadrature), x_j
//   the argmax of g_j.
// refined: the second published coefficient set, k = 3/2 only.
AppendixCoefficients G_coefficients(double k, CoeffVariant variant);

// crude: t - 2k t^2 (a lower bound); exact:
// int_0^{2t} (x+1)^{-k} dx - t (2t+1)^{-k}.  Requires 0 < t < 1/(2k).
double left_side(double t, double k, bool exact);

// First positive root of L - R by coarse scan (step 1e-4) plus bisection;
// certificate from the sphere grid sweep up to mu0 + 0.01.
Mu0Result solve_t0(double k, CoeffVariant variant, bool exact_left);

}  // namespace ltv
