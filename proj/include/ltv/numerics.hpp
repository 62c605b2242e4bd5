#pragma once

#include <functional>
#include <utility>
#include <vector>

// Foundation layer: special functions, bracketed root finding, scalar
// minimization, adaptive quadrature and a dense symmetric eigensolver.
// Everything here is pure and reentrant.

namespace ltv {

// Thrown by integrate_adaptive when the error estimate does not reach the
// requested tolerance; carries the best estimate obtained.
struct accuracy_error {
  double best_estimate;
  double error_estimate;
};

struct BracketedRoot {
  double lo;
  double hi;
  double tolerance;  // absolute, on the argument
};

// log Gamma(x), x > 0.  Lanczos approximation, relative error well below
// 1e-13 on [0.5, 50].
double log_gamma(double x);

// Euler Beta function B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b), a,b > 0.
double beta(double a, double b);

// Plain bisection on a sign-changing bracket.  Deterministic.
double find_root(const std::function<double(double)>& f, BracketedRoot bracket);

// Golden-section search preceded by a coarse grid scan that picks the
// bracketing interval (so non-unimodal inputs still land in a local
// minimum).  Returns (argmin, min).
std::pair<double, double> minimize_scalar(const std::function<double(double)>& f,
                                          double lo, double hi, double tol);

// Adaptive Gauss-Legendre quadrature on (a,b); pass b = +infinity for a
// half-line integral (handled by the substitution x = a + t/(1-t)).
// Endpoints are never evaluated, so integrable endpoint singularities are
// fine.  Throws accuracy_error if refinement stalls above tol.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol);

// All eigenvalues of a dense symmetric matrix, ascending.  Householder
// tridiagonalization followed by implicit-shift QL.  The input is given
// row-major, n x n; asymmetry beyond 1e-12 (relative) is a contract error.
std::vector<double> eig_sym(const std::vector<double>& a, int n);

}  // namespace ltv
