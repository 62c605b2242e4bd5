#include "ltv/spectral_sums.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

#include "ltv/lattice.hpp"
#include "ltv/numerics.hpp"

namespace ltv {

std::string domain_name(Domain d) {
  switch (d) {
    case Domain::Sphere2: return "sphere2";
    case Domain::Torus2: return "torus2";
    case Domain::Sphere3: return "sphere3";
    case Domain::Torus3: return "torus3";
  }
  return "?";
}

Domain domain_from_name(const std::string& s) {
  if (s == "sphere2") return Domain::Sphere2;
  if (s == "torus2") return Domain::Torus2;
  if (s == "sphere3") return Domain::Sphere3;
  if (s == "torus3") return Domain::Torus3;
  throw std::invalid_argument("unknown domain: " + s);
}

namespace {

void require_k(double k) {
  if (!(k > 1.0) || !(k < 2.0)) throw std::domain_error("k must lie in (1,2)");
}

inline bool is_three_halves(double k) { return std::fabs(k - 1.5) < 1e-12; }

inline double inv_pow(double base, double k, bool fast) {
  return fast ? 1.0 / (base * std::sqrt(base)) : std::pow(base, -k);
}

// Enumerations are cached (largest-so-far per dimension) because the grid
// sweeps hit the same lattice many times.
LatticeSpectrum lattice_upto(int dim, std::int64_t lambda_max) {
  static std::mutex mtx;
  static LatticeSpectrum cache2, cache3;
  std::lock_guard<std::mutex> lock(mtx);
  LatticeSpectrum& cache = (dim == 2) ? cache2 : cache3;
  if (cache.lambda_max < lambda_max) cache = enumerate_lattice(dim, lambda_max);
  if (cache.lambda_max == lambda_max) return cache;
  LatticeSpectrum sp;
  sp.dim = dim;
  sp.lambda_max = lambda_max;
  for (const auto& sh : cache.shells) {
    if (sh.first > lambda_max) break;
    sp.shells.push_back(sh);
  }
  return sp;
}

}  // namespace

// ---------------------------------------------------------------------------
// Sphere series.  The remainder past n = N is bracketed by the exact
// antiderivative of the (eventually decreasing) term function; the lower end
// of the bracket is folded into the value, so
//   true sum in [value, value + tail_bound].

namespace {

// int_N^inf (2x+1) (x(x+1)+mu^2)^{-k} dx
inline double sphere2_tail_integral(double N, double mu2, double k) {
  return std::pow(N * (N + 1.0) + mu2, 1.0 - k) / (k - 1.0);
}

}  // namespace

CertifiedValue sphere2_H_at_cutoff(double mu, double k, long long n_terms) {
  require_k(k);
  if (n_terms < 1) throw std::invalid_argument("sphere2_H_at_cutoff: n_terms >= 1");
  if (!(mu >= 0.0)) throw std::domain_error("sphere2_H_at_cutoff: mu must be >= 0");
  if (mu == 0.0) return {0.0, 0.0, n_terms};
  const double mu2 = mu * mu;
  const double pref = std::pow(mu, 2.0 * k - 2.0);
  const bool fast = is_three_halves(k);
  // terms decrease once n(n+1) > mu^2; the bracket needs that past the cutoff
  if (static_cast<double>(n_terms) < mu)
    throw std::invalid_argument("sphere2_H_at_cutoff: cutoff below mu");
  double s = 0.0;
  for (long long n = n_terms; n >= 1; --n) {
    double nd = static_cast<double>(n);
    s += (2.0 * nd + 1.0) * inv_pow(nd * (nd + 1.0) + mu2, k, fast);
  }
  double lo = sphere2_tail_integral(static_cast<double>(n_terms) + 1.0, mu2, k);
  double hi = sphere2_tail_integral(static_cast<double>(n_terms), mu2, k);
  return {pref * (s + lo), pref * (hi - lo), n_terms};
}

CertifiedValue sphere2_H(double mu, double k, double tol) {
  require_k(k);
  if (!(tol > 0.0)) throw std::domain_error("sphere2_H: tol must be positive");
  if (!(mu >= 0.0)) throw std::domain_error("sphere2_H: mu must be >= 0");
  if (mu == 0.0) return {0.0, 0.0, 0};
  const double mu2 = mu * mu;
  const double pref = std::pow(mu, 2.0 * k - 2.0);
  const long long cap = 200'000'000;
  long long n = std::max<long long>(16, static_cast<long long>(mu) + 2);
  while (n < cap) {
    double nd = static_cast<double>(n);
    double width = pref * (sphere2_tail_integral(nd, mu2, k) -
                           sphere2_tail_integral(nd + 1.0, mu2, k));
    if (width <= tol) break;
    n *= 2;
  }
  CertifiedValue cv = sphere2_H_at_cutoff(mu, k, std::min(n, cap));
  if (cv.tail_bound > tol) throw accuracy_error{cv.value, cv.tail_bound};
  return cv;
}

namespace {

// int_Y^inf y^2 / (y^2 + c)^2 dy, c = mu^2 - 1 (any sign; Y > sqrt(max(-c,0)))
double sphere3_tail_integral(double Y, double c) {
  if (c > 1e-9) {
    double r = std::sqrt(c);
    return Y / (2.0 * (Y * Y + c)) + (M_PI / 2.0 - std::atan(Y / r)) / (2.0 * r);
  }
  if (c < -1e-9) {
    double d = std::sqrt(-c);
    return Y / (2.0 * (Y * Y + c)) + std::log((Y + d) / (Y - d)) / (4.0 * d);
  }
  return 1.0 / Y;
}

}  // namespace

CertifiedValue sphere3_H_at_cutoff(double mu, long long n_terms) {
  if (n_terms < 1) throw std::invalid_argument("sphere3_H_at_cutoff: n_terms >= 1");
  if (!(mu >= 0.0)) throw std::domain_error("sphere3_H_at_cutoff: mu must be >= 0");
  if (mu == 0.0) return {0.0, 0.0, n_terms};
  const double c = mu * mu - 1.0;
  if (static_cast<double>(n_terms) + 1.0 <= std::sqrt(std::max(-c, 0.0)) ||
      static_cast<double>(n_terms) < mu)
    throw std::invalid_argument("sphere3_H_at_cutoff: cutoff below mu");
  double s = 0.0;
  for (long long n = n_terms; n >= 1; --n) {
    double y = static_cast<double>(n) + 1.0;
    double q = y * y + c;  // = n(n+2) + mu^2
    s += y * y / (q * q);
  }
  double lo = sphere3_tail_integral(static_cast<double>(n_terms) + 2.0, c);
  double hi = sphere3_tail_integral(static_cast<double>(n_terms) + 1.0, c);
  return {mu * (s + lo), mu * (hi - lo), n_terms};
}

CertifiedValue sphere3_H(double mu, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("sphere3_H: tol must be positive");
  if (!(mu >= 0.0)) throw std::domain_error("sphere3_H: mu must be >= 0");
  if (mu == 0.0) return {0.0, 0.0, 0};
  const double c = mu * mu - 1.0;
  const long long cap = 200'000'000;
  long long n = std::max<long long>(8, static_cast<long long>(mu) + 2);
  while (n < cap) {
    double nd = static_cast<double>(n);
    double width = mu * (sphere3_tail_integral(nd + 1.0, c) -
                         sphere3_tail_integral(nd + 2.0, c));
    if (width <= tol) break;
    n *= 2;
  }
  CertifiedValue cv = sphere3_H_at_cutoff(mu, std::min(n, cap));
  if (cv.tail_bound > tol) throw accuracy_error{cv.value, cv.tail_bound};
  return cv;
}

double sphere3_H_closed(double mu) {
  if (!(mu > 1.0)) throw std::domain_error("sphere3_H_closed: requires mu > 1");
  double s = std::sqrt(mu * mu - 1.0);
  double coth = 1.0 + 2.0 / std::expm1(2.0 * M_PI * s);
  return (M_PI / 4.0) * (mu / s) * coth +
         (M_PI * M_PI * mu / 4.0) * (1.0 - coth * coth) - 1.0 / (mu * mu * mu);
}

// ---------------------------------------------------------------------------
// Torus sums.

CertifiedValue torus2_F_at_radius(double mu, double k, long long lambda_max) {
  require_k(k);
  if (!(mu >= 0.0)) throw std::domain_error("torus2_F_at_radius: mu must be >= 0");
  if (mu == 0.0) return {0.0, 0.0, 0};
  const double mu2 = mu * mu;
  const double pref = std::pow(mu, 2.0 * k - 2.0);
  const bool fast = is_three_halves(k);
  LatticeSpectrum sp = lattice_upto(2, lambda_max);
  double s = 0.0;
  for (auto it = sp.shells.rbegin(); it != sp.shells.rend(); ++it)
    s += static_cast<double>(it->second) *
         inv_pow(static_cast<double>(it->first) + mu2, k, fast);
  // lambda_j >= j/8, so the remainder past the J enumerated points is at most
  // int_J^inf (x/8 + mu^2)^{-k} dx
  double J = static_cast<double>(sp.total_points());
  double cert = pref * 8.0 * std::pow(J / 8.0 + mu2, 1.0 - k) / (k - 1.0);
  return {pref * s, cert, sp.total_points()};
}

CertifiedValue torus2_F(double mu, double k, double tol) {
  require_k(k);
  if (!(tol > 0.0)) throw std::domain_error("torus2_F: tol must be positive");
  if (!(mu >= 0.0)) throw std::domain_error("torus2_F: mu must be >= 0");
  if (mu == 0.0) return {0.0, 0.0, 0};
  if (is_three_halves(k)) {
    // Poisson identity, exact at k = 3/2:
    //   F(mu) = 2 pi - 1/mu^2 + 2 pi sum' e^{-2 pi mu |m|}
    double head = 2.0 * M_PI - 1.0 / (mu * mu);
    try {
      CertifiedValue e = exp_tail_2d(mu, tol);
      return {head + e.value, e.tail_bound, e.terms_used};
    } catch (const accuracy_error& e) {
      throw accuracy_error{head + e.best_estimate, e.error_estimate};
    }
  }
  const std::int64_t cap = 4'000'000;
  std::int64_t lambda = 1024;
  CertifiedValue direct;
  for (;;) {
    direct = torus2_F_at_radius(mu, k, lambda);
    if (direct.tail_bound <= tol) return direct;
    if (lambda >= cap) break;
    lambda = std::min(cap, lambda * 4);
  }
  // Second route for larger mu, where the counting-bound tail stalls: the
  // Poisson head pi/(k-1) - 1/mu^2 with the transform enveloped by
  // |f_hat(xi)| <= C(k,a) e^{-a |xi|}, a = 1/2, giving a two-sided bracket.
  double env = 1e300;
  const double C = fourier_decay_bound(k, 0.5);
  try {
    CertifiedValue e = exp_tail_2d(0.5 * mu, std::min(tol, 1e-12));
    env = C * (e.value + e.tail_bound);
  } catch (const accuracy_error& e) {
    env = C * (e.best_estimate + e.error_estimate);
  }
  CertifiedValue bracket{M_PI / (k - 1.0) - 1.0 / (mu * mu) - env, 2.0 * env,
                         direct.terms_used};
  CertifiedValue best = (bracket.tail_bound < direct.tail_bound) ? bracket : direct;
  if (best.tail_bound <= tol) return best;
  throw accuracy_error{best.value, best.tail_bound};
}

namespace {

// lambda_j >= (j/27)^{2/3} in Z^3 gives, with U = (J/27)^{2/3},
//   sum_{j>J} (lambda_j + mu^2)^{-2}
//     <= (81/2) [ (pi/2 - atan(sqrt U / mu)) / mu + sqrt U / (U + mu^2) ]
double torus3_direct_tail(double mu, double J) {
  double U = std::pow(J / 27.0, 2.0 / 3.0);
  double rU = std::sqrt(U);
  return mu * (81.0 / 2.0) *
         ((M_PI / 2.0 - std::atan(rU / mu)) / mu + rU / (U + mu * mu));
}

// sum_{j>J} e^{-2 pi mu sqrt(lambda_j)} <= int_J^inf e^{-c x^{1/3}} dx,
// c = 2 pi mu / 3
double torus3_exp_tail(double mu, double J) {
  double c = 2.0 * M_PI * mu / 3.0;
  double V = std::cbrt(J);
  return 3.0 * std::exp(-c * V) * (V * V / c + 2.0 * V / (c * c) + 2.0 / (c * c * c));
}

}  // namespace

CertifiedValue torus3_F_at_radius(double mu, long long lambda_max) {
  if (!(mu >= 0.0)) throw std::domain_error("torus3_F_at_radius: mu must be >= 0");
  if (mu == 0.0) return {0.0, 0.0, 0};
  const double mu2 = mu * mu;
  LatticeSpectrum sp = lattice_upto(3, lambda_max);
  double s = 0.0;
  for (auto it = sp.shells.rbegin(); it != sp.shells.rend(); ++it) {
    double q = static_cast<double>(it->first) + mu2;
    s += static_cast<double>(it->second) / (q * q);
  }
  double J = static_cast<double>(sp.total_points());
  return {mu * s, torus3_direct_tail(mu, J), sp.total_points()};
}

CertifiedValue torus3_F(double mu, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("torus3_F: tol must be positive");
  if (!(mu >= 0.0)) throw std::domain_error("torus3_F: mu must be >= 0");
  if (mu == 0.0) return {0.0, 0.0, 0};
  const std::int64_t cap = 250'000;
  if (mu >= 0.05) {
    // Poisson identity, exact at this power:
    //   F(mu) = pi^2 - 1/mu^3 + pi^2 sum' e^{-2 pi mu |m|}
    double head = M_PI * M_PI - 1.0 / (mu * mu * mu);
    std::int64_t lambda = 256;
    for (;;) {
      LatticeSpectrum sp = lattice_upto(3, lambda);
      double J = static_cast<double>(sp.total_points());
      double cert = M_PI * M_PI * torus3_exp_tail(mu, J);
      if (cert <= tol || lambda >= cap) {
        double e = 0.0;
        for (auto it = sp.shells.rbegin(); it != sp.shells.rend(); ++it)
          e += static_cast<double>(it->second) *
               std::exp(-2.0 * M_PI * mu * std::sqrt(static_cast<double>(it->first)));
        double value = head + M_PI * M_PI * e;
        if (cert > tol) throw accuracy_error{value, cert};
        return {value, cert, sp.total_points()};
      }
      lambda = std::min(cap, lambda * 4);
    }
  }
  std::int64_t lambda = 1024;
  for (;;) {
    CertifiedValue cv = torus3_F_at_radius(mu, lambda);
    if (cv.tail_bound <= tol) return cv;
    if (lambda >= cap) throw accuracy_error{cv.value, cv.tail_bound};
    lambda = std::min(cap, lambda * 4);
  }
}

// ---------------------------------------------------------------------------

double limit_value(Domain domain, double k) {
  switch (domain) {
    case Domain::Sphere2:
      require_k(k);
      return 1.0 / (k - 1.0);
    case Domain::Torus2:
      require_k(k);
      return M_PI / (k - 1.0);
    case Domain::Sphere3:
      return M_PI / 4.0;
    case Domain::Torus3:
      return M_PI * M_PI;
  }
  throw std::logic_error("limit_value: bad domain");
}

double asymptotic_residual(Domain domain, double mu, double k) {
  if (!(mu > 0.0)) throw std::domain_error("asymptotic_residual: mu must be positive");
  double limit = limit_value(domain, k);
  CertifiedValue cv;
  switch (domain) {
    case Domain::Sphere2:
      cv = sphere2_H(mu, k, 1e-10);
      break;
    case Domain::Torus2:
      if (!is_three_halves(k))
        throw std::domain_error("asymptotic_residual: torus2 requires k = 3/2");
      cv = torus2_F(mu, k, 1e-12);
      break;
    case Domain::Sphere3:
      cv = sphere3_H(mu, 1e-10);
      break;
    case Domain::Torus3:
      cv = torus3_F(mu, 1e-10);
      break;
  }
  return mu * mu * (limit - (cv.value + 0.5 * cv.tail_bound));
}

CertifiedValue eval_certified(Domain domain, double k, double mu) {
  if (mu == 0.0) return {0.0, 0.0, 0};
  try {
    switch (domain) {
      case Domain::Sphere2:
        return sphere2_H(mu, k, 1e-8);
      case Domain::Torus2:
        return torus2_F(mu, k, is_three_halves(k) ? 1e-10 : 1e-6);
      case Domain::Sphere3:
        return sphere3_H(mu, 1e-9);
      case Domain::Torus3:
        return torus3_F(mu, mu < 0.05 ? 0.02 : 1e-8);
    }
  } catch (const accuracy_error& e) {
    // keep the honest (larger) certificate; the sweep margin absorbs it
    return {e.best_estimate, e.error_estimate, 0};
  }
  throw std::logic_error("eval_certified: bad domain");
}

SweepReport verify_on_interval(Domain domain, double k, double mu_upper,
                               double step, double margin_floor,
                               double limit_scale) {
  if (!(mu_upper > 0.0) || !(step > 0.0))
    throw std::domain_error("verify_on_interval: mu_upper and step must be positive");
  SweepReport rep;
  rep.domain = domain;
  rep.k = k;
  rep.limit = limit_value(domain, k) * limit_scale;
  rep.min_margin = 1e300;
  for (long long i = 0;; ++i) {
    double mu = static_cast<double>(i) * step;
    if (mu > mu_upper + 1e-12) break;
    CertifiedValue cv = eval_certified(domain, k, mu);
    double margin = rep.limit - (cv.value + cv.tail_bound);
    rep.points.push_back({mu, cv, margin});
    rep.min_margin = std::min(rep.min_margin, margin);
  }
  rep.passed = rep.min_margin > margin_floor;
  return rep;
}

std::pair<double, double> find_s3_max() {
  auto neg = [](double mu) { return -sphere3_H_closed(mu); };
  auto [mu_star, negmax] = minimize_scalar(neg, 1.1, 50.0, 1e-9);
  return {mu_star, -negmax / (M_PI / 4.0)};
}

}  // namespace ltv
