#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ridgebound/error.hpp"
#include "ridgebound/lattice.hpp"
#include "ridgebound/quadrature.hpp"
#include "ridgebound/ridge.hpp"

using namespace ridgebound;

namespace {

RidgeDirection direction(std::vector<Rational> c) {
  return RidgeDirection::from_coordinates(std::move(c), DirectionKind::lattice);
}

}  // namespace

TEST_CASE("activation values") {
  CHECK(eval_activation(Activation::sine(), 0.5) == doctest::Approx(std::sqrt(2.0)));
  CHECK(eval_activation(Activation::clip(), -3.0) == -1.0);
  CHECK(eval_activation(Activation::clip(), 0.4) == 0.4);
  CHECK(eval_activation(Activation::clip(), 0.0) == 0.0);
  CHECK(eval_activation(Activation::step(), 0.0) == 0.0);
  CHECK(eval_activation(Activation::step(), 1e-300) == 1.0);
  CHECK(eval_activation(Activation::sgn(), 0.0) == -1.0);
  CHECK(eval_activation(Activation::sgn(), 2.0) == 1.0);
  CHECK(eval_activation(Activation::hermite(2), 2.0) == doctest::Approx(3.0 / std::sqrt(2.0)));
}

TEST_CASE("hermite recurrence matches explicit polynomials") {
  const auto explicit_he = [](int ell, double z) {
    switch (ell) {
      case 0: return 1.0;
      case 1: return z;
      case 2: return z * z - 1;
      case 3: return z * z * z - 3 * z;
      case 4: return z * z * z * z - 6 * z * z + 3;
      default: return z * z * z * z * z - 10 * z * z * z + 15 * z;
    }
  };
  for (int ell = 0; ell <= 5; ++ell)
    for (int i = 0; i < 100; ++i) {
      const double z = -5.0 + 10.0 * i / 99.0;
      const double want = explicit_he(ell, z);
      CHECK(hermite_he(ell, z) == doctest::Approx(want).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("standardized hermite polynomials are orthonormal") {
  // 40-node rule integrates degree <= 79 exactly; moments from (k-1)!! as a second opinion
  const auto rule = gauss_hermite_rule(40);
  for (int l = 0; l <= 8; ++l)
    for (int m = 0; m <= 8; ++m) {
      double q = 0.0;
      for (Eigen::Index k = 0; k < rule.nodes.size(); ++k)
        q += rule.weights[k] * hermite_standardized(l, rule.nodes[k]) * hermite_standardized(m, rule.nodes[k]);
      CHECK(q == doctest::Approx(l == m ? 1.0 : 0.0).epsilon(1e-8).scale(1.0));
    }
  // E[phi_2^2] = (E Z^4 - 2 E Z^2 + 1) / 2 = 1 from the moment oracle
  CHECK((oracle::gaussian_moment(4) - 2 * oracle::gaussian_moment(2) + 1) / 2 == 1.0);
}

TEST_CASE("high-order hermite uses the normalized recurrence consistently") {
  for (double z : {-3.0, -0.7, 0.0, 1.3, 4.0}) {
    // step from l = 20 (factorial branch) to l = 21 via the normalized recurrence
    const double p19 = hermite_standardized(19, z), p20 = hermite_standardized(20, z);
    const double p21 = (z * p20 - std::sqrt(20.0) * p19) / std::sqrt(21.0);
    CHECK(hermite_standardized(21, z) == doctest::Approx(p21).epsilon(1e-10).scale(1e-10));
  }
  const auto rule = gauss_hermite_rule(60);
  double q = 0.0;
  for (Eigen::Index k = 0; k < rule.nodes.size(); ++k) {
    const double h = hermite_standardized(25, rule.nodes[k]);
    q += rule.weights[k] * h * h;
  }
  CHECK(q == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("clip is 1-Lipschitz and bounded") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 10000; ++i) {
    const double a = u(gen), b = u(gen);
    REQUIRE(std::abs(clip(a) - clip(b)) <= std::abs(a - b) + 1e-15);
    REQUIRE(std::abs(clip(a)) <= 1.0);
  }
}

TEST_CASE("ridge function evaluation") {
  const auto e1 = direction({Rational(1), Rational(0)});
  Eigen::Vector2d x(0.5, 17.0);
  CHECK(eval_ridge(RidgeFunction(Activation::sine(), e1), x) == doctest::Approx(std::sqrt(2.0)));
  CHECK(eval_ridge(RidgeFunction(Activation::clip(), e1, 0.0, 0.0), x) == 0.0);
  const auto unit = direction({Rational(3, 5), Rational(4, 5)});
  Eigen::Vector2d y(0.3, -1.1);
  CHECK(eval_ridge(RidgeFunction(Activation::hermite(1), unit), y) == doctest::Approx(0.6 * 0.3 - 0.8 * 1.1));
  CHECK(eval_ridge(RidgeFunction(Activation::step(), e1, 0.75, 2.0), x) == 0.0);
  CHECK(eval_ridge(RidgeFunction(Activation::step(), e1, 0.25, 2.0), x) == 2.0);
  Eigen::Vector3d z(1, 2, 3);
  CHECK_THROWS_AS(eval_ridge(RidgeFunction(Activation::sine(), e1), z), PreconditionError);
}

TEST_CASE("sine ridge values are bounded by sqrt(2) times the scale") {
  const auto dir = direction({Rational(2), Rational(-1), Rational(1)});
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const RidgeFunction f(Activation::sine(), dir, 0.3, 1.5);
  for (int i = 0; i < 1000; ++i) {
    Eigen::Vector3d x(u(gen), u(gen), u(gen));
    REQUIRE(std::abs(eval_ridge(f, x)) <= 1.5 * std::sqrt(2.0) + 1e-12);
  }
}

TEST_CASE("activation names round-trip") {
  for (auto k : {ActivationKind::sine, ActivationKind::sgn, ActivationKind::step, ActivationKind::clip,
                 ActivationKind::hermite, ActivationKind::clipped_hermite})
    CHECK(activation_from_string(to_string(k)) == k);
  CHECK_THROWS_AS(activation_from_string("relu"), PreconditionError);
  CHECK(family_from_string("hermite") == Family::hermite);
  CHECK_THROWS_AS(family_from_string("cosine"), PreconditionError);
}

TEST_CASE("hermite tail mass against closed forms") {
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-12;
  for (double zeta : {0.0, 0.5, 1.96, 3.0}) {
    CHECK(hermite_tail_mass(0, zeta, cfg) == doctest::Approx(oracle::tail_m0(zeta)).epsilon(1e-9).scale(1e-9));
    CHECK(hermite_tail_mass(1, zeta, cfg) == doctest::Approx(oracle::tail_m2(zeta)).epsilon(1e-9).scale(1e-9));
    const double m2 = (oracle::tail_m4(zeta) - 2 * oracle::tail_m2(zeta) + oracle::tail_m0(zeta)) / 2;
    CHECK(hermite_tail_mass(2, zeta, cfg) == doctest::Approx(m2).epsilon(1e-9).scale(1e-9));
  }
}

TEST_CASE("clip threshold for l = 0 is the two-sided Gaussian quantile") {
  const auto t = hermite_clip_threshold(0, 0.05);
  // default tolerance delta/100 on the tail mass moves zeta by at most 5e-4 / (2 pdf(1.96))
  CHECK(t.zeta == doctest::Approx(1.959963984540054).epsilon(5e-3));
  CHECK(oracle::tail_m0(t.zeta) <= 0.05 + 5e-4);
  QuadratureConfig tight;
  tight.abs_tol = 1e-13;
  CHECK(hermite_clip_threshold(0, 0.05, tight).zeta == doctest::Approx(1.959963984540054).epsilon(1e-9));
  CHECK_FALSE(t.boundary);
  CHECK(t.tail_mass <= 0.05 + 1e-9);
}

TEST_CASE("clip threshold at delta = 1 is the boundary case") {
  const auto t = hermite_clip_threshold(3, 1.0);
  CHECK(t.zeta == 0.0);
  CHECK(t.boundary);
  CHECK_THROWS_AS(hermite_clip_threshold(3, 0.0), PreconditionError);
}

TEST_CASE("clip threshold for l = 2 checked by independent Monte Carlo") {
  const auto t = hermite_clip_threshold(2, 0.01);
  // closed-form tail just below zeta exceeds delta, at zeta it does not
  const auto closed = [](double z) {
    return (oracle::tail_m4(z) - 2 * oracle::tail_m2(z) + oracle::tail_m0(z)) / 2;
  };
  CHECK(closed(t.zeta) <= 0.01 + 1e-6);
  CHECK(closed(t.zeta - 1e-3) > 0.01);
  const auto mc = oracle::mc_mean(
      [&](const Eigen::VectorXd& x) {
        const double h = hermite_standardized(2, x[0]);
        return std::abs(x[0]) > t.zeta ? h * h : 0.0;
      },
      1, 10'000'000, true, 77);
  CHECK(mc.mean <= 0.01 + 3.0 * mc.std_error);
}

TEST_CASE("clipped hermite holds its boundary value") {
  const auto act = Activation::clipped_hermite(3, 2.0);
  CHECK(eval_activation(act, 5.0) == doctest::Approx(hermite_standardized(3, 2.0)));
  CHECK(eval_activation(act, -7.0) == doctest::Approx(hermite_standardized(3, -2.0)));
  CHECK(eval_activation(act, 1.0) == doctest::Approx(hermite_standardized(3, 1.0)));
}

TEST_CASE("class descriptor validation") {
  ClassDescriptor c;
  CHECK_NOTHROW(c.validate());
  c.v0 = 0.0;
  CHECK_THROWS_AS(c.validate(), PreconditionError);
}
