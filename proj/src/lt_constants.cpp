#include "ltv/lt_constants.hpp"

#include <cmath>
#include <stdexcept>

#include "ltv/numerics.hpp"
#include "ltv/spectral_sums.hpp"

namespace ltv {

namespace {

void require_k(double k) {
  if (!(k > 1.0) || !(k < 2.0)) throw std::domain_error("k must lie in (1,2)");
}

}  // namespace

double classical_L(double gamma, int n) {
  if (!(gamma >= 0.0)) throw std::domain_error("classical_L: gamma must be >= 0");
  if (n < 1) throw std::domain_error("classical_L: n must be >= 1");
  return std::exp(log_gamma(gamma + 1.0) - 0.5 * n * std::log(4.0 * M_PI) -
                  log_gamma(0.5 * n + gamma + 1.0));
}

double best_known_factor() { return M_PI / std::sqrt(3.0); }

double trace_constant_2d(double k) {
  require_k(k);
  return beta(2.0 - k, 1.0 + k) /
         (4.0 * M_PI * std::pow(k - 1.0, k) * std::pow(2.0 - k, 2.0 - k));
}

std::pair<double, double> optimize_trace_constant_2d() {
  return minimize_scalar(trace_constant_2d, 1.05, 1.95, 1e-10);
}

std::pair<double, double> inner_integral_check(double k, double t, double V_minus) {
  require_k(k);
  if (!(t > 0.0) || !(t < 1.0))
    throw std::domain_error("inner_integral_check: t must lie in (0,1)");
  if (!(V_minus > 0.0))
    throw std::domain_error("inner_integral_check: V_minus must be positive");
  double closed = std::pow(t, 1.0 - k) * std::pow(1.0 - t, k - 2.0) *
                  beta(2.0 - k, 1.0 + k) * V_minus * V_minus;
  // the integrand vanishes past r = V / (1-t); substituting u = r^{2-k}
  // absorbs the r^{1-k} endpoint singularity exactly (r^{1-k} dr = du/(2-k))
  double r_max = V_minus / (1.0 - t);
  double alpha = 2.0 - k;
  auto f = [&](double u) {
    double r = std::pow(u, 1.0 / alpha);
    return std::pow(std::max(V_minus - (1.0 - t) * r, 0.0), k);
  };
  double quad = std::pow(t, 1.0 - k) / alpha *
                integrate_adaptive(f, 0.0, std::pow(r_max, alpha),
                                   1e-10 * closed);
  return {closed, quad};
}

double vector_constant_2d() { return 2.0 * trace_constant_2d(1.5); }

double k_from_L(double L1, int n) {
  if (!(L1 > 0.0)) throw std::domain_error("k_from_L: L1 must be positive");
  if (n < 1) throw std::domain_error("k_from_L: n must be >= 1");
  double nd = static_cast<double>(n);
  return (2.0 / nd) * std::pow(1.0 + nd / 2.0, 1.0 + 2.0 / nd) *
         std::pow(L1, 2.0 / nd);
}

Constants3D constants_3d() {
  Constants3D c;
  // int_0^inf (r/2)^{-1/2} (r/2 - V)_-^2 dr at V = 1: support is (0, 2);
  // parametrized r = 2 u^2 to lift the endpoint square-root singularity
  auto f = [](double u) {
    double r = 2.0 * u * u;
    double w = 1.0 - 0.5 * r;
    return (w * w / std::sqrt(0.5 * r)) * 4.0 * u;
  };
  c.integral_factor = integrate_adaptive(f, 0.0, 1.0, 1e-11);
  c.L_T3 = 4.0 / (15.0 * M_PI);
  static const double delta = find_s3_max().second;
  c.L_S3 = delta * c.L_T3;
  return c;
}

double taikov_c(double l) {
  if (!(l > 0.5 + 1e-9)) throw std::domain_error("taikov_c: l must exceed 1/2");
  double a = 1.0 / (2.0 * l);
  return 1.0 / (2.0 * l * std::pow(a, a) * std::pow(1.0 - a, 1.0 - a) *
                std::sin(M_PI * a));
}

double zelik_K(int l) {
  if (l == 1) return 1.0 / M_PI;
  if (l == 2) return 2.0 / (3.0 * M_PI);
  throw std::invalid_argument("zelik_K: only l = 1, 2 are tabulated");
}

TwoTermConstants two_term_constants(int l, double period) {
  if (!(period > 0.0))
    throw std::domain_error("two_term_constants: period must be positive");
  double K_L = zelik_K(l) * (2.0 * M_PI / period);
  double cl = taikov_c(static_cast<double>(l));
  double p = 2.0 * l + 1.0;
  TwoTermConstants r;
  r.trace_coeff = (2.0 * l / std::pow(p, p / (2.0 * l))) * cl;
  r.count_coeff = std::pow(K_L / cl, 2.0 * l);
  return r;
}

std::vector<ConstantEntry> constants_table() {
  std::vector<ConstantEntry> t;
  auto add = [&t](const std::string& name, double value, const std::string& formula) {
    ConstantEntry e;
    e.name = name;
    e.value = value;
    e.formula = formula;
    t.push_back(e);
  };
  auto add_ref = [&t](const std::string& name, double value,
                      const std::string& formula, double ref, double tol) {
    ConstantEntry e;
    e.name = name;
    e.value = value;
    e.formula = formula;
    e.has_reference = true;
    e.reference_value = ref;
    e.tolerance = tol;
    t.push_back(e);
  };

  add_ref("L_cl_1_2", classical_L(1.0, 2), "Gamma(2)/((4pi) Gamma(3))",
          1.0 / (8.0 * M_PI), 1e-12);
  add_ref("L_cl_3/2_1", classical_L(1.5, 1), "Gamma(5/2)/(sqrt(4pi) Gamma(3))",
          0.1875, 1e-12);
  add_ref("best_known_factor", best_known_factor(), "pi/sqrt(3)", 1.8138, 1e-4);
  add_ref("trace_constant_2d(3/2)", trace_constant_2d(1.5),
          "B(1/2,5/2)/(4pi (1/2)^{3/2} (1/2)^{1/2})", 0.375, 1e-12);
  auto [ks, ls] = optimize_trace_constant_2d();
  add_ref("trace_constant_2d_kstar", ks, "argmin over k in (1,2)", 1.385, 5e-3);
  add_ref("trace_constant_2d_min", ls, "min over k in (1,2)", 0.3605, 2e-4);
  add_ref("vector_constant_2d", vector_constant_2d(), "2 * trace_constant_2d(3/2)",
          0.75, 1e-12);
  add_ref("k2_from_3/8", k_from_L(0.375, 2), "4 L1", 1.5, 1e-12);
  add_ref("k2_lower", k_from_L(classical_L(1.0, 2), 2), "4 L_cl_1_2",
          1.0 / (2.0 * M_PI), 1e-12);
  Constants3D c3 = constants_3d();
  add_ref("integral_factor_3d", c3.integral_factor,
          "int_0^inf (r/2)^{-1/2}(r/2-1)_-^2 dr", 32.0 / 15.0, 1e-9);
  add_ref("L_T3", c3.L_T3, "4/(15 pi)", 0.08488, 5e-6);
  add_ref("L_S3", c3.L_S3, "delta_S3 * 4/(15 pi)", 1.0139 * 4.0 / (15.0 * M_PI),
          1e-4);
  add_ref("taikov_c(1)", taikov_c(1.0), "(2 a^a (1-a)^{1-a} sin(pi a))^{-1}, a=1/2",
          1.0, 1e-12);
  add_ref("taikov_c(2)", taikov_c(2.0), "(4 a^a (1-a)^{1-a} sin(pi a))^{-1}, a=1/4",
          std::pow(4.0 / 27.0, 0.25), 1e-12);
  add_ref("zelik_K(1)", zelik_K(1), "1/pi", 1.0 / M_PI, 1e-12);
  add_ref("zelik_K(2)", zelik_K(2), "2/(3 pi)", 2.0 / (3.0 * M_PI), 1e-12);
  TwoTermConstants tt1 = two_term_constants(1, 2.0 * M_PI);
  add_ref("two_term_trace(1)", tt1.trace_coeff, "(2/3^{3/2}) c(1)",
          2.0 / (3.0 * std::sqrt(3.0)), 1e-12);
  add_ref("two_term_count(1)", tt1.count_coeff, "(K(1)/c(1))^2",
          1.0 / (M_PI * M_PI), 1e-12);
  TwoTermConstants tt2 = two_term_constants(2, 2.0 * M_PI);
  add("two_term_trace(2)", tt2.trace_coeff, "(4/5^{5/4}) c(2)");
  add("two_term_count(2)", tt2.count_coeff, "(K(2)/c(2))^4");
  return t;
}

}  // namespace ltv
