#pragma once

#include <cstdint>
#include <vector>

// Real orthonormal spherical harmonics on S^2 with analytic tangent
// gradients, the eigenvalue/multiplicity tables of the unit spheres, the two
// shell identities (sum of squares, sum of squared gradients) and the
// full-shell lower-bound experiment.

namespace ltv {

struct SpherePoint {
  double theta = 0.0;  // colatitude in [0, pi]
  double phi = 0.0;    // azimuth in [0, 2 pi)
};

struct HarmonicShell {
  int n = 0;
  // 2n+1 entries, ordered (m=0), (m=1,cos), (m=1,sin), ..., (m=n,sin)
  std::vector<double> values;
  std::vector<double> grad_theta;
  std::vector<double> grad_phi;  // (1/sin theta) d/dphi component
};

// (Lambda_n, multiplicity) for the sphere S^{m-1}, n = 1..n_max:
// Lambda_n = n(n+m-2); multiplicities 2, 2n+1, (n+1)^2 for m = 2,3,4 and the
// binomial formula ((2n+m-2)/n) C(n+m-3, n-1) in general.
std::vector<std::pair<std::int64_t, std::int64_t>> eigen_table(int m, int n_max);

// Normalized associated Legendre recurrences; gradients come from the
// pole-regular ladder identities, so poles need no special casing.
HarmonicShell eval_shell(int n, SpherePoint p);

// | sum_l Y_l^2 - (2n+1)/(4 pi) |
double addition_identity_residual(int n, SpherePoint p);

// | sum_l |grad Y_l|^2 - n(n+1)(2n+1)/(4 pi) |
double gradient_identity_residual(int n, SpherePoint p);

// With N = n0(n0+2) complete shells: (N^2 / 4 pi) / sum_{n<=n0} (2n+1) n(n+1),
// increasing toward 1/(2 pi).
double shell_ratio(int n0);

}  // namespace ltv
