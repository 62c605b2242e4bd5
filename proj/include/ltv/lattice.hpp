#pragma once

#include <cstdint>
#include <vector>

#include "ltv/spectral_types.hpp"

// Integer lattice spectra of Z^2 and Z^3 (nonzero points, squared norms with
// multiplicity), the counting bounds used by the torus tail certificates, the
// exponential Poisson-tail series and the torus mu0 thresholds.

namespace ltv {

struct LatticeSpectrum {
  int dim = 2;                  // 2 or 3
  std::int64_t lambda_max = 0;  // enumeration cutoff on |m|^2
  // (lambda, multiplicity), ascending in lambda; only realized lambdas.
  std::vector<std::pair<std::int64_t, std::int64_t>> shells;

  // N(lambda) = #{ j : lambda_j <= lambda }
  std::int64_t counting(std::int64_t lambda) const;
  std::int64_t total_points() const;
};

struct CountingReport {
  double max_ratio_N_over_lambda = 0.0;   // max N(lambda)/lambda over shells
  double min_ratio_lambda_j_over_j = 0.0; // min over j of lambda_j * 8 / j
  double min_ratio_lambda_j_over_j4 = 0.0;// min over j of lambda_j * 4 / j
  bool passed = false;
};

// Exact enumeration of m in Z^dim \ {0} with |m|^2 <= lambda_max.  Only
// (lambda, multiplicity) pairs are stored.  Throws std::length_error with a
// suggested cap when the request exceeds the memory/time budget.
LatticeSpectrum enumerate_lattice(int dim, std::int64_t lambda_max);

// N(lambda) <= 8 lambda, lambda_j >= j/8 and lambda_j >= j/4 over the whole
// enumerated range.
CountingReport check_counting_bounds(const LatticeSpectrum& spectrum);

// 2pi * sum_{m in Z^2_0} exp(-2 pi mu |m|), with the remainder certified by
// the chain  sum_{j>J} e^{-2 pi mu sqrt(lambda_j)} <= sum_{j>J} e^{-2L sqrt j}
// <= integral comparison, L = pi mu / (2 sqrt 2)  (uses lambda_j >= j/8).
CertifiedValue exp_tail_2d(double mu, double tol);

// Closed-form majorant of the full series used for the threshold argument:
// 2pi * (16 / (pi^2 mu^2)) e^{-pi mu / (2 sqrt 2)} for the crude (j/8) chain,
// and 2pi * (8 / (pi^2 mu^2)) e^{-pi mu / 2} for the sharp (j/4) chain.
double exp_tail_2d_chain_bound(double mu, bool sharp);

// (crude, sharp) thresholds: (2 sqrt2/pi) log(32/pi) and (2/pi) log(16/pi).
std::pair<double, double> torus2_mu0();

// Coefficient 1 / (2 (k-1) (1-2a^2)^{k-1}) of the Fourier decay envelope
// |f_hat(xi)| <= C e^{-a |xi|}, 0 < a < sqrt2/2.
double fourier_decay_bound(double k, double a);

// A mu0 valid for general k in (1,2): smallest grid value of
// (2/(pi a)) log(16 C(k,a) / (pi a^2)) over a in (0, sqrt2/2), i.e. the
// threshold beyond which the enveloped Poisson correction stays below 1/mu^2.
double general_k_mu0(double k);

// Quadrature vs closed form pi e^{-|xi|} for the transform of 1/(1+x^2).
std::pair<double, double> fourier_check_1d(double xi);

}  // namespace ltv
