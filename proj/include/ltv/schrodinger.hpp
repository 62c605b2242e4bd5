#pragma once

#include <cmath>
#include <utility>
#include <vector>

// Rayleigh-Ritz (Galerkin) lab: Fourier discretization of the periodic
// Schrödinger-type operators on the zero-mean subspace, negative-spectrum
// extraction, and the proved trace/counting/orthonormal-family bounds
// evaluated on trigonometric-polynomial potentials.
//
// Sign conventions: the 2D form is |grad h|^2 + V h^2 (bounds involve V_-);
// the 1D order-2l form is |phi^(l)|^2 - V phi^2 with V >= 0.

namespace ltv {

// V(x) = a0 + sum_j (a[j-1] cos(j w x) + b[j-1] sin(j w x)), w = 2 pi / period
struct Potential1D {
  double a0 = 0.0;
  std::vector<double> a, b;
  double period = 2.0 * M_PI;

  double operator()(double x) const;
};

// One exact-frequency term c_cos cos(q.x) + c_sin sin(q.x) on [0,2pi]^2;
// q canonical (q1 > 0, or q1 == 0 and q2 >= 0).
struct TrigTerm2D {
  int q1 = 0, q2 = 0;
  double c_cos = 0.0, c_sin = 0.0;
};

struct Potential2D {
  std::vector<TrigTerm2D> terms;

  double operator()(double x, double y) const;
};

// -A (1 + cos x)(1 + cos y) / 2
Potential2D product_well_2d(double A);

struct GalerkinConfig {
  int cutoff = 8;  // max |m| (1D) or |m|_inf (2D) of retained modes, m != 0
  int l = 1;       // operator order 2l (1D only)
};

struct GalerkinMatrix {
  int n = 0;
  std::vector<double> a;  // row-major, symmetric
};

struct NegativeSpectrum {
  std::vector<double> eigenvalues;  // all Galerkin eigenvalues <= 0, ascending
  int count = 0;
  double trace = 0.0;  // sum of magnitudes
};

// Basis {cos(m w x), sin(m w x)} / norm, 1 <= m <= cutoff; kinetic diagonal
// (m w)^{2l}, potential entries exact in the coefficients, with the -V sign.
GalerkinMatrix assemble_1d(const Potential1D& V, GalerkinConfig cfg);

// Basis {cos(m.x), sin(m.x)} / norm over the canonical half of the m != 0
// square |m|_inf <= cutoff; kinetic diagonal |m|^2, +V sign.
GalerkinMatrix assemble_2d_torus(const Potential2D& V, GalerkinConfig cfg);

NegativeSpectrum negative_spectrum(const GalerkinMatrix& A);

// (3/8) int V_-^2 - sum |nu_j|;  must be >= 0.
double check_trace_bound_2d(const NegativeSpectrum& spec, const Potential2D& V);

// trace_coeff int V^{(2l+1)/(2l)} - (sum |nu_j| + N count_coeff); V >= 0
// required; must be >= 0.
double check_two_term_1d(const NegativeSpectrum& spec, const Potential1D& V,
                         int l, double period);

// lhs = #{Galerkin eigenvalues <= -r}; rhs = (1/4pi) (1/(k-1)) (t r)^{1-k}
// int (V + (1-t) r)_-^k.
std::pair<int, double> check_counting_2d(const Potential2D& V, double r,
                                         double k, double t, GalerkinConfig cfg);

enum class FamilyKind { scalar2d_grad, oneD_order_l };

// One orthonormal family member: mode (q1, q2) (q2 ignored in 1D), cos or sin
// branch, normalized on the respective domain.
struct FamilyMember {
  int q1 = 0, q2 = 0;
  bool is_sin = false;
};

// scalar2d_grad: margin = (3/2) sum |q|^2  -  int rho^2,    rho = sum phi_j^2
// oneD_order_l:  margin = c(l)^{2l} sum q^{2l} - int rho^{2l+1} - N K(l)^{2l}
double orthonormal_family_check(FamilyKind kind,
                                const std::vector<FamilyMember>& family, int l);

}  // namespace ltv
