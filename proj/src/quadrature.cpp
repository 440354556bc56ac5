#include "ridgebound/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

#include "ridgebound/error.hpp"

namespace ridgebound {

namespace {

struct SimpsonState {
  const Integrand& f;
  int max_depth;
  std::size_t evaluations = 0;
  bool failed = false;
  double error = 0.0;

  double eval(double x) {
    ++evaluations;
    return f(x);
  }

  double recurse(double a, double b, double fa, double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = eval(lm), frm = eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double both = left + right;
    const double delta = both - whole;
    // Tolerances below the rounding level of the panel's absolute mass cannot be met.
    const double mass = (b - a) / 12.0 *
                        (std::abs(fa) + 4.0 * std::abs(flm) + 2.0 * std::abs(fm) + 4.0 * std::abs(frm) + std::abs(fb));
    const double floor_tol = 64.0 * std::numeric_limits<double>::epsilon() * mass;
    if (std::abs(delta) <= 15.0 * std::max(tol, floor_tol)) {
      error += std::abs(delta) / 15.0;
      return both + delta / 15.0;
    }
    if (depth >= max_depth) {
      failed = true;
      error += std::abs(delta) / 15.0;
      return both + delta / 15.0;
    }
    return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }
};

}  // namespace

QuadratureResult adaptive_simpson(const Integrand& f, double a, double b, const QuadratureConfig& cfg) {
  require(cfg.abs_tol > 0.0, "quadrature: abs_tol must be positive");
  if (a == b) return {};
  SimpsonState st{f, cfg.max_depth};
  const double fa = st.eval(a), fb = st.eval(b), fm = st.eval(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double value = st.recurse(a, b, fa, fm, fb, whole, cfg.abs_tol, 0);
  if (st.failed)
    throw ConvergenceError("adaptive_simpson: depth " + std::to_string(cfg.max_depth) + " reached on [" +
                           std::to_string(a) + ", " + std::to_string(b) + "]");
  return {value, st.error, st.evaluations};
}

QuadratureResult integrate_piecewise(const Integrand& f, double a, double b, std::vector<double> breakpoints,
                                     const QuadratureConfig& cfg) {
  const double lo = std::min(a, b), hi = std::max(a, b);
  std::vector<double> cuts{lo};
  std::sort(breakpoints.begin(), breakpoints.end());
  for (double x : breakpoints)
    if (x > lo && x < hi && x > cuts.back()) cuts.push_back(x);
  cuts.push_back(hi);

  QuadratureResult total;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    QuadratureConfig piece = cfg;
    piece.abs_tol = cfg.abs_tol * (cuts[i + 1] - cuts[i]) / (hi - lo);
    const double lo_edge = cuts[i], hi_edge = cuts[i + 1];
    const auto inner = [&f, lo_edge, hi_edge](double x) {
      if (x == lo_edge) return f(std::nextafter(lo_edge, hi_edge));
      if (x == hi_edge) return f(std::nextafter(hi_edge, lo_edge));
      return f(x);
    };
    const auto r = adaptive_simpson(inner, lo_edge, hi_edge, piece);
    total.value += r.value;
    total.error_estimate += r.error_estimate;
    total.evaluations += r.evaluations;
  }
  if (b < a) total.value = -total.value;
  return total;
}

GaussRule gauss_hermite_rule(int n) {
  require(n >= 1, "gauss_hermite_rule: need n >= 1");
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) jacobi(k - 1, k) = jacobi(k, k - 1) = std::sqrt(static_cast<double>(k));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi, Eigen::EigenvaluesOnly);
  GaussRule rule;
  rule.nodes = solver.eigenvalues();
  rule.weights.resize(n);
  // Eigenvector weights are only absolutely accurate; polish each node by Newton on
  // the normalized phi_n and take w = 1 / sum_k phi_k(x)^2, which is relatively accurate.
  for (int i = 0; i < n; ++i) {
    double x = rule.nodes[i], christoffel = 1.0;
    for (int it = 0; it < 3; ++it) {
      double prev = 1.0, cur = x;
      christoffel = 1.0;
      for (int k = 1; k < n; ++k) {
        christoffel += cur * cur;
        const double next = (x * cur - std::sqrt(static_cast<double>(k)) * prev) / std::sqrt(static_cast<double>(k + 1));
        prev = cur;
        cur = next;
      }
      if (n == 1) cur = x;
      const double deriv = std::sqrt(static_cast<double>(n)) * prev;  // phi_n' = sqrt(n) phi_{n-1}
      if (deriv == 0.0) break;
      x -= cur / deriv;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 1.0 / christoffel;
  }
  for (int i = 0; i < n / 2; ++i) {
    const int j = n - 1 - i;
    const double x = 0.5 * (rule.nodes[j] - rule.nodes[i]), w = 0.5 * (rule.weights[i] + rule.weights[j]);
    rule.nodes[i] = -x;
    rule.nodes[j] = x;
    rule.weights[i] = rule.weights[j] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace ridgebound
