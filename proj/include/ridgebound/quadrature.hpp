#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include <Eigen/Core>

namespace ridgebound {

struct QuadratureConfig {
  double abs_tol = 1e-10;
  int max_depth = 50;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

using Integrand = std::function<double(double)>;

// Adaptive Simpson with Richardson correction. Throws ConvergenceError if some
// panel hits max_depth with its local error above the local tolerance.
QuadratureResult adaptive_simpson(const Integrand& f, double a, double b, const QuadratureConfig& cfg = {});

// Splits [a, b] at the given breakpoints (those outside (a, b) are ignored) and
// integrates each smooth piece, sharing abs_tol across pieces by length. Piece
// endpoints are evaluated one ulp inside, so jumps there act as one-sided limits.
QuadratureResult integrate_piecewise(const Integrand& f, double a, double b, std::vector<double> breakpoints,
                                     const QuadratureConfig& cfg = {});

// n-point Gauss rule for E[g(Z)], Z ~ N(0, 1) (Golub-Welsch on the Jacobi
// matrix of the probabilists' Hermite recurrence). Weights sum to 1.
struct GaussRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

GaussRule gauss_hermite_rule(int n);

}  // namespace ridgebound
