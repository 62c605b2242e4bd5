#include "ltv/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ltv {

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
  // Lanczos, g = 7, 9 terms.
  static const double c[9] = {
      0.99999999999980993,    676.5203681218851,    -1259.1392167224028,
      771.32342877765313,     -176.61502916214059,  12.507343278686905,
      -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) {
    // reflection: Gamma(x)Gamma(1-x) = pi/sin(pi x)
    return std::log(M_PI / std::sin(M_PI * x)) - log_gamma(1.0 - x);
  }
  double z = x - 1.0;
  double s = c[0];
  for (int i = 1; i < 9; ++i) s += c[i] / (z + i);
  double t = z + 7.5;
  return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(s);
}

double beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("beta: arguments must be positive");
  return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

double find_root(const std::function<double(double)>& f, BracketedRoot br) {
  double lo = br.lo, hi = br.hi;
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (flo * fhi > 0.0) throw std::invalid_argument("find_root: no sign change on bracket");
  while (hi - lo > br.tolerance) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;  // bracket at machine resolution
    double fm = f(mid);
    if (fm == 0.0) return mid;
    if (flo * fm < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

std::pair<double, double> minimize_scalar(const std::function<double(double)>& f,
                                          double lo, double hi, double tol) {
  if (!(lo < hi)) return {0.5 * (lo + hi), f(0.5 * (lo + hi))};
  // Coarse scan to bracket a local minimum (handles non-unimodal input).
  const int kGrid = 64;
  double h = (hi - lo) / kGrid;
  int best = 0;
  double bestv = f(lo);
  for (int i = 1; i <= kGrid; ++i) {
    double v = f(lo + i * h);
    if (v < bestv) {
      bestv = v;
      best = i;
    }
  }
  double a = lo + std::max(0, best - 1) * h;
  double b = lo + std::min(kGrid, best + 1) * h;
  // Golden section on [a, b].
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = f(x2);
    }
  }
  double xm = 0.5 * (a + b);
  return {xm, f(xm)};
}

namespace {

// 15-point Gauss-Legendre nodes/weights on [-1,1] (positive half; symmetric).
const double kGx[8] = {0.0,
                       0.2011940939974345,
                       0.3941513470775634,
                       0.5709721726085388,
                       0.7244177313601701,
                       0.8482065834104272,
                       0.9372733924007060,
                       0.9879925180204854};
const double kGw[8] = {0.2025782419255613,
                       0.1984314853271116,
                       0.1861610000155622,
                       0.1662692058169939,
                       0.1395706779261543,
                       0.1071592204671719,
                       0.0703660474881081,
                       0.0307532419961173};

double gauss15(const std::function<double(double)>& f, double a, double b) {
  double c = 0.5 * (a + b), hw = 0.5 * (b - a);
  double s = kGw[0] * f(c);
  for (int i = 1; i < 8; ++i)
    s += kGw[i] * (f(c - hw * kGx[i]) + f(c + hw * kGx[i]));
  return s * hw;
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double whole, double tol, int depth, double* err_out) {
  double m = 0.5 * (a + b);
  double left = gauss15(f, a, m), right = gauss15(f, m, b);
  double delta = left + right - whole;
  if (std::fabs(delta) <= tol || depth >= 48) {
    *err_out += std::fabs(delta);
    return left + right;
  }
  double e1 = 0.0, e2 = 0.0;
  double r = adapt(f, a, m, left, 0.5 * tol, depth + 1, &e1) +
             adapt(f, m, b, right, 0.5 * tol, depth + 1, &e2);
  *err_out += e1 + e2;
  return r;
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol) {
  if (std::isinf(b)) {
    // x = a + t/(1-t), dx = dt/(1-t)^2, t in (0,1)
    auto g = [&](double t) {
      double om = 1.0 - t;
      return f(a + t / om) / (om * om);
    };
    return integrate_adaptive(g, 0.0, 1.0, tol);
  }
  double err = 0.0;
  double whole = gauss15(f, a, b);
  double r = adapt(f, a, b, whole, tol, 0, &err);
  if (!(err <= 10.0 * tol) || !std::isfinite(r)) throw accuracy_error{r, err};
  return r;
}

// ---------------------------------------------------------------------------
// Dense symmetric eigensolver: tred2-style Householder reduction (eigenvalues
// only) + implicit-shift QL on the resulting tridiagonal form.

namespace {

void householder_tridiag(std::vector<double>& a, int n, std::vector<double>& d,
                         std::vector<double>& e) {
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  for (int i = n - 1; i > 0; --i) {
    int l = i - 1;
    double h = 0.0, scale = 0.0;
    if (l > 0) {
      for (int k = 0; k <= l; ++k) scale += std::fabs(a[i * n + k]);
      if (scale == 0.0) {
        e[i] = a[i * n + l];
      } else {
        for (int k = 0; k <= l; ++k) {
          a[i * n + k] /= scale;
          h += a[i * n + k] * a[i * n + k];
        }
        double f = a[i * n + l];
        double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        a[i * n + l] = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += a[j * n + k] * a[i * n + k];
          for (int k = j + 1; k <= l; ++k) g += a[k * n + j] * a[i * n + k];
          e[j] = g / h;
          f += e[j] * a[i * n + j];
        }
        double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = a[i * n + j];
          e[j] = g = e[j] - hh * f;
          for (int k = 0; k <= j; ++k)
            a[j * n + k] -= f * e[k] + g * a[i * n + k];
        }
      }
    } else {
      e[i] = a[i * n + l];
    }
    d[i] = h;
  }
  for (int i = 0; i < n; ++i) d[i] = a[i * n + i];
}

double pythag(double x, double y) {
  double ax = std::fabs(x), ay = std::fabs(y);
  if (ax > ay) {
    double r = ay / ax;
    return ax * std::sqrt(1.0 + r * r);
  }
  if (ay == 0.0) return 0.0;
  double r = ax / ay;
  return ay * std::sqrt(1.0 + r * r);
}

void ql_implicit(std::vector<double>& d, std::vector<double>& e, int n) {
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= 1e-300 || std::fabs(e[m]) <= 2.3e-16 * dd) break;
      }
      if (m != l) {
        if (++iter == 60)
          throw std::runtime_error("eig_sym: QL failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = pythag(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::fabs(r) : -std::fabs(r)));
        double s = 1.0, c = 1.0, p = 0.0;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i], b = c * e[i];
          r = pythag(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (r == 0.0 && m - 1 >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

std::vector<double> eig_sym(const std::vector<double>& a_in, int n) {
  if (n <= 0 || static_cast<int>(a_in.size()) != n * n)
    throw std::invalid_argument("eig_sym: bad dimensions");
  double norm = 0.0, asym = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      norm = std::max(norm, std::fabs(a_in[i * n + j]));
      asym = std::max(asym, std::fabs(a_in[i * n + j] - a_in[j * n + i]));
    }
  for (int i = 0; i < n; ++i) norm = std::max(norm, std::fabs(a_in[i * n + i]));
  if (norm > 0.0 && asym > 1e-12 * norm)
    throw std::invalid_argument("eig_sym: matrix is not symmetric");

  if (n == 1) return {a_in[0]};
  std::vector<double> a = a_in;
  std::vector<double> d, e;
  householder_tridiag(a, n, d, e);
  ql_implicit(d, e, n);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace ltv
