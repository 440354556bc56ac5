#include <doctest.h>

#include <numbers>

#include "oracles.hpp"
#include "ridgebound/error.hpp"
#include "ridgebound/quadrature.hpp"

using namespace ridgebound;

TEST_CASE("adaptive simpson on smooth integrands") {
  CHECK(adaptive_simpson([](double x) { return x * x * x; }, 0.0, 2.0).value == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(adaptive_simpson([](double x) { return std::exp(x); }, 0.0, 1.0).value ==
        doctest::Approx(std::numbers::e - 1.0).epsilon(1e-12));
  CHECK(adaptive_simpson([](double x) { return std::sin(x); }, 0.0, std::numbers::pi).value ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(adaptive_simpson([](double) { return 1.0; }, 3.0, 3.0).value == 0.0);
}

TEST_CASE("adaptive simpson meets its tolerance against a midpoint oracle") {
  const auto f = [](double x) { return std::cos(7.0 * x) * std::exp(-x); };
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-11;
  const double want = oracle::midpoint(f, 0.0, 3.0, 200000);
  CHECK(std::abs(adaptive_simpson(f, 0.0, 3.0, cfg).value - want) < 1e-9);
}

TEST_CASE("piecewise integration across a jump") {
  const auto f = [](double x) { return x < 0.3 ? 1.0 : -2.0; };
  const auto r = integrate_piecewise(f, 0.0, 1.0, {0.3});
  CHECK(r.value == doctest::Approx(0.3 - 1.4).epsilon(1e-13));
  // reversed limits flip the sign, out-of-range breakpoints are ignored
  CHECK(integrate_piecewise(f, 1.0, 0.0, {0.3, 5.0, -1.0}).value == doctest::Approx(1.1).epsilon(1e-13));
}

TEST_CASE("jumps at piece endpoints are one-sided limits") {
  // the integrand is wrong exactly at t = 1 (as sgn(0) = -1 would make it)
  const auto f = [](double t) { return t < 1.0 ? 2.0 * std::cos(3.0 * t) : std::cos(3.0); };
  CHECK(integrate_piecewise(f, 0.0, 1.0, {}).value == doctest::Approx(2.0 * std::sin(3.0) / 3.0).epsilon(1e-12));
}

TEST_CASE("non-convergence is reported") {
  QuadratureConfig cfg;
  cfg.max_depth = 3;
  cfg.abs_tol = 1e-14;
  CHECK_THROWS_AS(adaptive_simpson([](double x) { return std::sin(50.0 * x); }, 0.0, 1.0, cfg), ConvergenceError);
  cfg.abs_tol = 0.0;
  CHECK_THROWS_AS(adaptive_simpson([](double x) { return x; }, 0.0, 1.0, cfg), PreconditionError);
}

TEST_CASE("gauss-hermite rule reproduces gaussian moments") {
  for (int n : {1, 5, 20}) {
    const auto rule = gauss_hermite_rule(n);
    CHECK(rule.weights.sum() == doctest::Approx(1.0).epsilon(1e-13));
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double m = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) m += rule.weights[i] * std::pow(rule.nodes[i], k);
      // odd moments are compared on the scale of E|Z|^k
      CHECK(m == doctest::Approx(oracle::gaussian_moment(k)).epsilon(1e-12).scale(oracle::gaussian_moment(k + k % 2)));
    }
  }
}
