#pragma once

#include <string>
#include <utility>
#include <vector>

// Named constants of the inequality family: semiclassical constants, the 2D
// trace constant and its optimum in k, vector/3D constants, the k2 <-> L1
// relation and the 1D two-term constants c(l), K(l).

namespace ltv {

struct ConstantEntry {
  std::string name;
  double value = 0.0;
  std::string formula;  // defining expression, human readable
  bool has_reference = false;
  double reference_value = 0.0;  // published value, when one exists
  double tolerance = 0.0;        // |value - reference_value| must stay below
};

// L^cl_{gamma,n} = Gamma(gamma+1) / ((4 pi)^{n/2} Gamma(n/2 + gamma + 1))
double classical_L(double gamma, int n);

// pi / sqrt(3), the factor the 2D results improve on.
double best_known_factor();

// (1/4pi) B(2-k, 1+k) / ((k-1)^k (2-k)^{2-k}), 1 < k < 2.
double trace_constant_2d(double k);

// (k_star, L_star): minimum of trace_constant_2d over [1.05, 1.95].
std::pair<double, double> optimize_trace_constant_2d();

// Closed form t^{1-k} (1-t)^{k-2} B(2-k, 1+k) V^2 vs adaptive quadrature of
// int_0^inf (t r)^{1-k} ((1-t) r - V)_-^k dr.  Returns (closed, quadrature).
std::pair<double, double> inner_integral_check(double k, double t, double V_minus);

// 2 * trace_constant_2d(3/2) = 3/4 (same value on the torus).
double vector_constant_2d();

// k_n = (2/n) (1 + n/2)^{1 + 2/n} L1^{2/n}; reduces to 4 L1 at n = 2.
double k_from_L(double L1, int n);

struct Constants3D {
  double integral_factor = 0.0;  // quadrature value of the 32/15 integral
  double L_T3 = 0.0;             // 4 / (15 pi)
  double L_S3 = 0.0;             // delta_S3 * 4 / (15 pi)
};
Constants3D constants_3d();

// c(l) = (2 l alpha^alpha (1-alpha)^{1-alpha} sin(pi alpha))^{-1},
// alpha = 1/(2l); l > 1/2.
double taikov_c(double l);

// K(1) = 1/pi, K(2) = 2/(3 pi); other l unsupported (no published formula).
double zelik_K(int l);

struct TwoTermConstants {
  double trace_coeff = 0.0;  // (2l / (2l+1)^{(2l+1)/(2l)}) c(l)
  double count_coeff = 0.0;  // (K_L(l) / c(l))^{2l}, K_L = K(l) * 2pi/period
};
TwoTermConstants two_term_constants(int l, double period);

// Everything above as one table (CLI output).
std::vector<ConstantEntry> constants_table();

}  // namespace ltv
