#include "ltv/schrodinger.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "ltv/lt_constants.hpp"
#include "ltv/numerics.hpp"

namespace ltv {

double Potential1D::operator()(double x) const {
  double w = 2.0 * M_PI / period;
  double v = a0;
  for (size_t j = 0; j < a.size(); ++j) v += a[j] * std::cos((j + 1) * w * x);
  for (size_t j = 0; j < b.size(); ++j) v += b[j] * std::sin((j + 1) * w * x);
  return v;
}

double Potential2D::operator()(double x, double y) const {
  double v = 0.0;
  for (const auto& t : terms) {
    double ph = t.q1 * x + t.q2 * y;
    v += t.c_cos * std::cos(ph) + t.c_sin * std::sin(ph);
  }
  return v;
}

Potential2D product_well_2d(double A) {
  Potential2D V;
  V.terms = {{0, 0, -A / 2.0, 0.0},
             {1, 0, -A / 2.0, 0.0},
             {0, 1, -A / 2.0, 0.0},
             {1, 1, -A / 4.0, 0.0},
             {1, -1, -A / 4.0, 0.0}};
  return V;
}

// ---------------------------------------------------------------------------
// 1D assembly: basis [cos(1 w x) .. cos(c w x), sin(1 w x) .. sin(c w x)],
// each normalized on [0, period].  The block layout makes the even-potential
// cos/sin decoupling visible directly in the matrix.

GalerkinMatrix assemble_1d(const Potential1D& V, GalerkinConfig cfg) {
  if (cfg.cutoff < 1) throw std::invalid_argument("assemble_1d: cutoff must be >= 1");
  if (cfg.l < 1) throw std::invalid_argument("assemble_1d: l must be >= 1");
  const int c = cfg.cutoff;
  const int n = 2 * c;
  const double P = V.period;
  const double w = 2.0 * M_PI / P;
  // int_0^P V cos(q w x) dx and the sine analogue, exact in the coefficients
  auto Ic = [&](int q) {
    if (q == 0) return P * V.a0;
    return (q <= static_cast<int>(V.a.size())) ? 0.5 * P * V.a[q - 1] : 0.0;
  };
  auto Is = [&](int q) {  // odd in q
    int s = (q < 0) ? -1 : 1;
    q = std::abs(q);
    if (q == 0 || q > static_cast<int>(V.b.size())) return 0.0;
    return s * 0.5 * P * V.b[q - 1];
  };
  GalerkinMatrix M;
  M.n = n;
  M.a.assign(static_cast<size_t>(n) * n, 0.0);
  const double nrm = 2.0 / P;  // product of the two basis normalizations
  for (int m = 1; m <= c; ++m)
    for (int mp = 1; mp <= c; ++mp) {
      double cc = 0.5 * nrm * (Ic(std::abs(m - mp)) + Ic(m + mp));
      double ss = 0.5 * nrm * (Ic(std::abs(m - mp)) - Ic(m + mp));
      double cs = 0.5 * nrm * (Is(m + mp) + Is(mp - m));
      // quadratic form |phi^(l)|^2 - V phi^2
      M.a[(m - 1) * n + (mp - 1)] = -cc;
      M.a[(c + m - 1) * n + (c + mp - 1)] = -ss;
      M.a[(m - 1) * n + (c + mp - 1)] = -cs;
      M.a[(c + mp - 1) * n + (m - 1)] = -cs;
    }
  for (int m = 1; m <= c; ++m) {
    double kin = std::pow(m * w, 2.0 * cfg.l);
    M.a[(m - 1) * n + (m - 1)] += kin;
    M.a[(c + m - 1) * n + (c + m - 1)] += kin;
  }
  return M;
}

// ---------------------------------------------------------------------------
// 2D assembly on [0, 2 pi]^2, canonical half-lattice of nonzero modes.

namespace {

struct ModeKey {
  int q1, q2;
  bool operator<(const ModeKey& o) const {
    return (q1 != o.q1) ? q1 < o.q1 : q2 < o.q2;
  }
};

// flips to the canonical representative; returns the sine sign
int canonical(int& q1, int& q2) {
  if (q1 < 0 || (q1 == 0 && q2 < 0)) {
    q1 = -q1;
    q2 = -q2;
    return -1;
  }
  return 1;
}

}  // namespace

GalerkinMatrix assemble_2d_torus(const Potential2D& V, GalerkinConfig cfg) {
  if (cfg.cutoff < 1)
    throw std::invalid_argument("assemble_2d_torus: cutoff must be >= 1");
  const int c = cfg.cutoff;
  std::vector<std::pair<int, int>> modes;
  for (int m2 = 1; m2 <= c; ++m2) modes.emplace_back(0, m2);
  for (int m1 = 1; m1 <= c; ++m1)
    for (int m2 = -c; m2 <= c; ++m2) modes.emplace_back(m1, m2);
  const int n = 2 * static_cast<int>(modes.size());
  if (n > 4000)
    throw std::length_error("assemble_2d_torus: dimension exceeds 4000, reduce cutoff");

  std::map<ModeKey, std::pair<double, double>> coeff;  // canonical -> (cos, sin)
  for (const auto& t : V.terms) {
    int q1 = t.q1, q2 = t.q2;
    int s = canonical(q1, q2);
    auto& e = coeff[{q1, q2}];
    e.first += t.c_cos;
    e.second += s * t.c_sin;
  }
  const double pi2 = M_PI * M_PI;
  auto Ic = [&](int q1, int q2) {  // int V cos(q.x)
    canonical(q1, q2);
    auto it = coeff.find({q1, q2});
    if (it == coeff.end()) return 0.0;
    return (q1 == 0 && q2 == 0) ? 4.0 * pi2 * it->second.first
                                : 2.0 * pi2 * it->second.first;
  };
  auto Is = [&](int q1, int q2) {  // int V sin(q.x), odd
    if (q1 == 0 && q2 == 0) return 0.0;
    int s = canonical(q1, q2);
    auto it = coeff.find({q1, q2});
    return (it == coeff.end()) ? 0.0 : s * 2.0 * pi2 * it->second.second;
  };

  GalerkinMatrix M;
  M.n = n;
  M.a.assign(static_cast<size_t>(n) * n, 0.0);
  const double nrm = 1.0 / (2.0 * pi2);
  const int nm = static_cast<int>(modes.size());
  for (int i = 0; i < nm; ++i)
    for (int j = 0; j < nm; ++j) {
      auto [a1, a2] = modes[i];
      auto [b1, b2] = modes[j];
      int d1 = a1 - b1, d2 = a2 - b2, s1 = a1 + b1, s2 = a2 + b2;
      double cc = 0.5 * nrm * (Ic(d1, d2) + Ic(s1, s2));
      double ss = 0.5 * nrm * (Ic(d1, d2) - Ic(s1, s2));
      double cs = 0.5 * nrm * (Is(s1, s2) - Is(d1, d2));  // cos_i * sin_j
      M.a[(2 * i) * n + 2 * j] = cc;
      M.a[(2 * i + 1) * n + 2 * j + 1] = ss;
      M.a[(2 * i) * n + 2 * j + 1] = cs;
      M.a[(2 * j + 1) * n + 2 * i] = cs;
    }
  for (int i = 0; i < nm; ++i) {
    double kin = static_cast<double>(modes[i].first) * modes[i].first +
                 static_cast<double>(modes[i].second) * modes[i].second;
    M.a[(2 * i) * n + 2 * i] += kin;
    M.a[(2 * i + 1) * n + 2 * i + 1] += kin;
  }
  return M;
}

NegativeSpectrum negative_spectrum(const GalerkinMatrix& A) {
  std::vector<double> ev = eig_sym(A.a, A.n);
  NegativeSpectrum s;
  for (double v : ev)
    if (v <= 0.0) {
      s.eigenvalues.push_back(v);
      s.trace += -v;
    }
  s.count = static_cast<int>(s.eigenvalues.size());
  return s;
}

// ---------------------------------------------------------------------------
// Integral helpers: periodic trapezoid grids, exact for the trigonometric
// polynomials appearing with integer powers, spectrally accurate otherwise.

namespace {

constexpr int kGrid1 = 4096;
constexpr int kGrid2 = 256;

template <class F>
double integral_1d(const F& f, double period) {
  double s = 0.0;
  for (int i = 0; i < kGrid1; ++i) s += f(period * i / kGrid1);
  return s * period / kGrid1;
}

template <class F>
double integral_2d(const F& f) {
  double s = 0.0;
  for (int i = 0; i < kGrid2; ++i)
    for (int j = 0; j < kGrid2; ++j)
      s += f(2.0 * M_PI * i / kGrid2, 2.0 * M_PI * j / kGrid2);
  double h = 2.0 * M_PI / kGrid2;
  return s * h * h;
}

}  // namespace

double check_trace_bound_2d(const NegativeSpectrum& spec, const Potential2D& V) {
  double i2 = integral_2d([&](double x, double y) {
    double vm = std::max(-V(x, y), 0.0);
    return vm * vm;
  });
  return 0.375 * i2 - spec.trace;
}

double check_two_term_1d(const NegativeSpectrum& spec, const Potential1D& V,
                         int l, double period) {
  double vmin = 0.0;
  for (int i = 0; i < kGrid1; ++i)
    vmin = std::min(vmin, V(period * i / kGrid1));
  if (vmin < -1e-9)
    throw std::invalid_argument("check_two_term_1d: potential must be nonnegative");
  double p = (2.0 * l + 1.0) / (2.0 * l);
  double iv = integral_1d(
      [&](double x) { return std::pow(std::max(V(x), 0.0), p); }, period);
  TwoTermConstants tc = two_term_constants(l, period);
  return tc.trace_coeff * iv - (spec.trace + spec.count * tc.count_coeff);
}

std::pair<int, double> check_counting_2d(const Potential2D& V, double r,
                                         double k, double t, GalerkinConfig cfg) {
  if (!(r > 0.0)) throw std::domain_error("check_counting_2d: r must be positive");
  if (!(k > 1.0) || !(k < 2.0))
    throw std::domain_error("check_counting_2d: k must lie in (1,2)");
  if (!(t > 0.0) || !(t < 1.0))
    throw std::domain_error("check_counting_2d: t must lie in (0,1)");
  NegativeSpectrum spec = negative_spectrum(assemble_2d_torus(V, cfg));
  int lhs = 0;
  for (double v : spec.eigenvalues)
    if (v <= -r) ++lhs;
  double iv = integral_2d([&](double x, double y) {
    return std::pow(std::max(-(V(x, y) + (1.0 - t) * r), 0.0), k);
  });
  double rhs = iv * std::pow(t * r, 1.0 - k) / (4.0 * M_PI * (k - 1.0));
  return {lhs, rhs};
}

double orthonormal_family_check(FamilyKind kind,
                                const std::vector<FamilyMember>& family, int l) {
  if (family.empty()) return 0.0;
  // distinct canonical modes of a Fourier family are orthonormal by
  // construction; reject duplicates and the zero mode instead of forming a
  // Gram matrix
  for (size_t i = 0; i < family.size(); ++i) {
    int q1 = family[i].q1, q2 = family[i].q2;
    if (kind == FamilyKind::oneD_order_l && q1 < 1)
      throw std::invalid_argument("orthonormal_family_check: 1D modes must be >= 1");
    canonical(q1, q2);
    if (q1 == 0 && q2 == 0)
      throw std::invalid_argument("orthonormal_family_check: zero mode not allowed");
    for (size_t j = 0; j < i; ++j) {
      int p1 = family[j].q1, p2 = family[j].q2;
      canonical(p1, p2);
      if (p1 == q1 && p2 == q2 && family[j].is_sin == family[i].is_sin)
        throw std::invalid_argument("orthonormal_family_check: duplicate member");
    }
  }
  if (kind == FamilyKind::scalar2d_grad) {
    double grad = 0.0;
    for (const auto& f : family)
      grad += static_cast<double>(f.q1) * f.q1 + static_cast<double>(f.q2) * f.q2;
    const double nrm = 1.0 / (std::sqrt(2.0) * M_PI);
    double irho2 = integral_2d([&](double x, double y) {
      double rho = 0.0;
      for (const auto& f : family) {
        double ph = f.q1 * x + f.q2 * y;
        double v = (f.is_sin ? std::sin(ph) : std::cos(ph)) * nrm;
        rho += v * v;
      }
      return rho * rho;
    });
    return 1.5 * grad - irho2;
  }
  // oneD_order_l
  double deriv = 0.0;
  for (const auto& f : family) deriv += std::pow(f.q1, 2.0 * l);
  const double nrm = 1.0 / std::sqrt(M_PI);
  double irho = integral_1d(
      [&](double x) {
        double rho = 0.0;
        for (const auto& f : family) {
          double v = (f.is_sin ? std::sin(f.q1 * x) : std::cos(f.q1 * x)) * nrm;
          rho += v * v;
        }
        return std::pow(rho, 2.0 * l + 1.0);
      },
      2.0 * M_PI);
  double cl = taikov_c(static_cast<double>(l));
  double K = zelik_K(l);
  return std::pow(cl, 2.0 * l) * deriv - irho -
         family.size() * std::pow(K, 2.0 * l);
}

}  // namespace ltv
