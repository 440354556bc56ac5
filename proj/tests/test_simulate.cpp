#include <doctest.h>

#include <cmath>

#include "ridgebound/error.hpp"
#include "ridgebound/info.hpp"
#include "ridgebound/simulate.hpp"

using namespace ridgebound;

namespace {

const PackingSet& small_packing() {
  static const PackingSet ps = build_sine_packing(4, 2, 1.0, 0.3);
  return ps;
}

// argmin over members of the residual sum of squares, computed directly
std::size_t brute_force_select(const PackingSet& ps, const Eigen::MatrixXd& X, const Eigen::VectorXd& Y) {
  std::size_t best = 0;
  double best_rss = INFINITY;
  for (std::size_t w = 0; w < ps.size(); ++w) {
    const auto f = member_function(ps, w);
    double rss = 0.0;
    for (Eigen::Index i = 0; i < X.rows(); ++i) rss += std::pow(Y[i] - f(X.row(i).transpose()), 2);
    if (rss < best_rss) {
      best_rss = rss;
      best = w;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("design moments") {
  const auto U = sample_design(Design::uniform_cube, 3, 20000, 11);
  CHECK(U.rows() == 20000);
  CHECK(U.cols() == 3);
  CHECK(U.maxCoeff() <= 1.0);
  CHECK(U.minCoeff() >= -1.0);
  CHECK(std::abs(U.mean()) < 0.02);
  CHECK(U.array().square().mean() == doctest::Approx(1.0 / 3.0).epsilon(0.02));
  const auto G = sample_design(Design::gaussian, 3, 20000, 11);
  CHECK(std::abs(G.mean()) < 0.02);
  CHECK(G.array().square().mean() == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("streams are keyed by seed and trial") {
  CHECK(sample_design(Design::gaussian, 2, 5, 3, 0) == sample_design(Design::gaussian, 2, 5, 3, 0));
  CHECK(sample_design(Design::gaussian, 2, 5, 3, 0) != sample_design(Design::gaussian, 2, 5, 3, 1));
  CHECK(sample_design(Design::gaussian, 2, 5, 3, 0) != sample_design(Design::gaussian, 2, 5, 4, 0));
  // a prefix of a longer sample is the shorter sample
  CHECK(sample_design(Design::uniform_cube, 2, 50, 3).topRows(10) == sample_design(Design::uniform_cube, 2, 10, 3));
  const auto e = noise_vector(30000, 8, 2.0);
  CHECK(std::abs(e.mean()) < 0.05);
  CHECK(std::sqrt(e.array().square().mean()) == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("generate_data adds noise to the function values") {
  const auto X = sample_design(Design::uniform_cube, 2, 7, 1);
  const PointFunction f = [](const Eigen::Ref<const Eigen::VectorXd>& x) { return x[0] - x[1]; };
  const auto Y = generate_data(f, X, 5, 0.5);
  const auto e = noise_vector(7, 5, 0.5);
  for (Eigen::Index i = 0; i < 7; ++i) CHECK(Y[i] == doctest::Approx(X(i, 0) - X(i, 1) + e[i]));
}

TEST_CASE("least squares selector matches a brute-force residual search") {
  const auto& ps = small_packing();
  for (std::uint32_t t = 0; t < 20; ++t) {
    const auto X = sample_design(Design::uniform_cube, 4, 15, 2, t);
    const auto Y = generate_data(member_function(ps, t % ps.size()), X, 2, 1.0, t);
    CHECK(least_squares_select_data(ps, X, Y) == brute_force_select(ps, X, Y));
  }
}

TEST_CASE("selector tie-breaks to the lowest index") {
  const auto& ps = small_packing();
  const Eigen::MatrixXd empty(0, static_cast<Eigen::Index>(ps.directions.size()));
  CHECK(least_squares_select(ps, empty, Eigen::VectorXd(0)) == 0);

  auto one = ps;
  one.codebook.words.resize(1);
  const auto X = sample_design(Design::uniform_cube, 4, 4, 1);
  CHECK(least_squares_select_data(one, X, Eigen::VectorXd::Ones(4)) == 0);
  CHECK_THROWS_AS(least_squares_select(ps, empty, Eigen::VectorXd(3)), PreconditionError);
}

TEST_CASE("noise-free data identifies the member") {
  const auto& ps = small_packing();
  const auto X = sample_design(Design::uniform_cube, 4, 200, 6);
  for (std::size_t w = 0; w < ps.size(); w += 3) {
    const auto Y = generate_data(member_function(ps, w), X, 6, 1e-9);
    CHECK(least_squares_select_data(ps, X, Y) == w);
  }
}

TEST_CASE("tuned sample size") {
  const auto& ps = small_packing();
  const double norm = mean_member_norm(ps);
  CHECK(norm == doctest::Approx(ps.v1 * ps.v1 / ps.L));
  const auto n = tuned_sample_size(ps, 0.1);
  CHECK(n == std::max<std::int64_t>(1, std::llround(0.2 * ps.log_cardinality / norm)));
  CHECK_THROWS_AS(tuned_sample_size(ps, 0.0), PreconditionError);
}

TEST_CASE("Fano experiment report is consistent and thread invariant") {
  const auto& ps = small_packing();
  const auto a = fano_experiment(ps, 5, 200, 3, 1);
  const auto b = fano_experiment(ps, 5, 200, 3, 8);
  CHECK(a.errors == b.errors);
  CHECK(a.empirical_risk == b.empirical_risk);
  CHECK(a.trials == 200);
  CHECK(a.cardinality == ps.size());
  CHECK(a.empirical_error_prob == doctest::Approx(a.errors / 200.0));
  CHECK(a.stderr_error == doctest::Approx(std::sqrt(a.empirical_error_prob * (1 - a.empirical_error_prob) / 200.0)));
  CHECK(a.mutual_info_bound == doctest::Approx(kl_regression(a.mean_norm_sq, 5)));
  CHECK(a.implied_alpha == doctest::Approx(a.mutual_info_bound / a.log_cardinality));
  CHECK(a.fano_prediction == fano_bound_implied(a.log_cardinality, a.mutual_info_bound).probability);
  CHECK(a.risk_lower_bound == doctest::Approx(risk_from_testing(ps.epsilon, a.fano_prediction)));
  CHECK(a.pinsker_prediction.has_value() == (a.implied_alpha > 0 && a.implied_alpha < 0.125));
  CHECK(a.pass == (a.empirical_error_prob >= a.fano_prediction - 3 * a.stderr_error));
  CHECK(a.pass);

  const auto c = fano_experiment(ps, 5, 200, 4, 1);
  CHECK(c.seed == 4);
  CHECK_THROWS_AS(fano_experiment(ps, 5, 99, 3), PreconditionError);
  CHECK_THROWS_AS(fano_experiment(ps, 0, 200, 3), PreconditionError);
}

TEST_CASE("large samples make the bound vacuous and errors rare") {
  const auto& ps = small_packing();
  const auto r = fano_experiment(ps, 2000, 100, 5, 2);
  CHECK(r.vacuous);
  CHECK(r.fano_prediction == 0.0);
  CHECK(r.empirical_error_prob < 0.05);
}
