#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include <Eigen/Core>

#include "ridgebound/design.hpp"
#include "ridgebound/gram.hpp"
#include "ridgebound/packing.hpp"

namespace ridgebound {

// n x d inputs; entry (i, j) is keyed by (seed, i, j, trial).
Eigen::MatrixXd sample_design(Design design, int d, std::size_t n, std::uint64_t seed, std::uint32_t trial = 0);

// Y_i = f(X_i) + sigma * noise_i, noise keyed by (seed, i, trial).
Eigen::VectorXd generate_data(const PointFunction& f, const Eigen::Ref<const Eigen::MatrixXd>& X, std::uint64_t seed,
                              double sigma = 1.0, std::uint32_t trial = 0);
Eigen::VectorXd noise_vector(std::size_t n, std::uint64_t seed, double sigma = 1.0, std::uint32_t trial = 0);

// argmin_w sum_i (Y_i - f_w(X_i))^2 over the packing, lowest index on ties.
// Scores use b = Phi'Y and G = Phi'Phi with Phi the n x M feature matrix.
std::size_t least_squares_select(const PackingSet& ps, const Eigen::Ref<const Eigen::MatrixXd>& features,
                                 const Eigen::Ref<const Eigen::VectorXd>& Y);
std::size_t least_squares_select_data(const PackingSet& ps, const Eigen::Ref<const Eigen::MatrixXd>& X,
                                      const Eigen::Ref<const Eigen::VectorXd>& Y);

struct ExperimentReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::int64_t n = 0;
  double sigma = 1.0;
  std::string packing_id;
  Family family = Family::sine;
  int d = 0, v0 = 0, ell = 0;
  double v1 = 0.0, epsilon = 0.0;
  std::size_t L = 0, cardinality = 0;
  double log_cardinality = 0.0;
  double mean_norm_sq = 0.0;
  double mutual_info_bound = 0.0;
  double implied_alpha = 0.0;
  std::size_t errors = 0;
  double empirical_error_prob = 0.0;
  double stderr_error = 0.0;  // sqrt(p(1 - p) / trials)
  double fano_raw = 0.0;
  double fano_prediction = 0.0;
  std::optional<double> pinsker_prediction;  // only for implied alpha in (0, 1/8)
  double risk_lower_bound = 0.0;
  double empirical_risk = 0.0;  // mean ||f_hat - f_w||^2 from the separation matrix
  double stderr_risk = 0.0;
  bool vacuous = false;
  bool pass = false;       // empirical_error_prob >= fano_prediction - 3 stderr
  bool risk_pass = false;  // empirical_risk >= risk_lower_bound - 3 stderr_risk
};

// Sample size with (n / 2 sigma^2) * mean ||f||^2 = fraction * log #F0, rounded, at least 1.
std::int64_t tuned_sample_size(const PackingSet& ps, double fraction, double sigma = 1.0);

double mean_member_norm(const PackingSet& ps, unsigned threads = 1);

// Draw w uniformly from the packing, simulate n observations and identify w by
// least squares; repeated `trials` times on keyed streams.
ExperimentReport fano_experiment(const PackingSet& ps, std::int64_t n, std::size_t trials, std::uint64_t seed,
                                 unsigned threads = 1, double sigma = 1.0);

}  // namespace ridgebound
