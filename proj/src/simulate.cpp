#include "ridgebound/simulate.hpp"

#include <cmath>
#include <limits>

#include "ridgebound/error.hpp"
#include "ridgebound/info.hpp"
#include "ridgebound/parallel.hpp"
#include "ridgebound/rng.hpp"

namespace ridgebound {

namespace {

constexpr std::uint32_t kDesignDomain = 0x5844;
constexpr std::uint32_t kNoiseDomain = 0x4E5A;
constexpr std::uint32_t kMemberDomain = 0x4F4D;

std::uint32_t index32(std::size_t i, const char* what) {
  require(i <= std::numeric_limits<std::uint32_t>::max(), std::string(what) + ": index exceeds 32 bits");
  return static_cast<std::uint32_t>(i);
}

}  // namespace

Eigen::MatrixXd sample_design(Design design, int d, std::size_t n, std::uint64_t seed, std::uint32_t trial) {
  require(d >= 1, "sample_design: need d >= 1");
  const CounterRng rng(seed, kDesignDomain);
  Eigen::MatrixXd X(static_cast<Eigen::Index>(n), d);
  Eigen::VectorXd row(d);
  for (std::size_t i = 0; i < n; ++i) {
    draw_point(design, rng, index32(i, "sample_design"), trial, row);
    X.row(static_cast<Eigen::Index>(i)) = row.transpose();
  }
  return X;
}

Eigen::VectorXd noise_vector(std::size_t n, std::uint64_t seed, double sigma, std::uint32_t trial) {
  const CounterRng rng(seed, kNoiseDomain);
  Eigen::VectorXd e(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) e[static_cast<Eigen::Index>(i)] = sigma * rng.normal(index32(i, "noise"), 0, trial);
  return e;
}

Eigen::VectorXd generate_data(const PointFunction& f, const Eigen::Ref<const Eigen::MatrixXd>& X, std::uint64_t seed,
                              double sigma, std::uint32_t trial) {
  Eigen::VectorXd Y = noise_vector(static_cast<std::size_t>(X.rows()), seed, sigma, trial);
  for (Eigen::Index i = 0; i < X.rows(); ++i) Y[i] += f(X.row(i).transpose());
  return Y;
}

std::size_t least_squares_select(const PackingSet& ps, const Eigen::Ref<const Eigen::MatrixXd>& features,
                                 const Eigen::Ref<const Eigen::VectorXd>& Y) {
  require(ps.size() >= 1, "least_squares_select: empty packing");
  require(features.rows() == Y.size(), "least_squares_select: features and responses differ in length");
  require(features.cols() == static_cast<Eigen::Index>(ps.directions.size()),
          "least_squares_select: feature matrix has wrong width");
  const Eigen::VectorXd b = features.transpose() * Y;
  const Eigen::MatrixXd G = features.transpose() * features;
  const double c = ps.v1 / static_cast<double>(ps.L);
  std::size_t best = 0;
  double best_score = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> support;
  for (std::size_t w = 0; w < ps.size(); ++w) {
    support = ps.codebook.words[w].support();
    double lin = 0.0, quad = 0.0;
    for (std::size_t a = 0; a < support.size(); ++a) {
      const auto i = static_cast<Eigen::Index>(support[a]);
      lin += b[i];
      quad += G(i, i);
      for (std::size_t k = a + 1; k < support.size(); ++k) quad += 2.0 * G(i, static_cast<Eigen::Index>(support[k]));
    }
    const double score = -2.0 * c * lin + c * c * quad;
    if (score < best_score) {
      best_score = score;
      best = w;
    }
  }
  return best;
}

std::size_t least_squares_select_data(const PackingSet& ps, const Eigen::Ref<const Eigen::MatrixXd>& X,
                                      const Eigen::Ref<const Eigen::VectorXd>& Y) {
  return least_squares_select(ps, feature_matrix(ps, X), Y);
}

double mean_member_norm(const PackingSet& ps, unsigned threads) {
  require(ps.size() >= 1, "mean_member_norm: empty packing");
  if (ps.certificate.common_norm) return *ps.certificate.common_norm;
  const auto G = packing_gram(ps, threads);
  std::vector<double> norms(ps.size());
  parallel_for(ps.size(), threads,
               [&](std::size_t i) { norms[i] = packing_norm(ps.codebook.words[i], ps.v1, ps.L, G.entries); });
  double s = 0.0;
  for (double v : norms) s += v;
  return s / static_cast<double>(norms.size());
}

std::int64_t tuned_sample_size(const PackingSet& ps, double fraction, double sigma) {
  require(fraction > 0.0, "tuned_sample_size: need fraction > 0");
  const double per_obs = mean_member_norm(ps) / (2.0 * sigma * sigma);
  const double n = std::round(fraction * ps.log_cardinality / per_obs);
  return n < 1.0 ? 1 : static_cast<std::int64_t>(n);
}

ExperimentReport fano_experiment(const PackingSet& ps, std::int64_t n, std::size_t trials, std::uint64_t seed,
                                 unsigned threads, double sigma) {
  require(trials >= 100, "fano_experiment: need trials >= 100");
  require(n >= 1, "fano_experiment: need n >= 1");
  require(ps.size() >= 2, "fano_experiment: packing needs at least two members");
  require(sigma > 0.0, "fano_experiment: need sigma > 0");

  ExperimentReport r;
  r.seed = seed;
  r.trials = trials;
  r.n = n;
  r.sigma = sigma;
  r.family = ps.family;
  r.d = ps.d;
  r.v0 = ps.v0;
  r.ell = ps.ell;
  r.v1 = ps.v1;
  r.epsilon = ps.epsilon;
  r.L = ps.L;
  r.cardinality = ps.size();
  r.log_cardinality = ps.log_cardinality;

  const auto G = packing_gram(ps, threads);
  const CounterRng members(seed, kMemberDomain);
  const auto nn = static_cast<std::size_t>(n);
  const double c = ps.v1 / static_cast<double>(ps.L);
  Eigen::MatrixXd theta(ps.d, static_cast<Eigen::Index>(ps.directions.size()));
  for (std::size_t k = 0; k < ps.directions.size(); ++k)
    theta.col(static_cast<Eigen::Index>(k)) = ps.directions[k].to_vector();

  std::vector<char> wrong(trials, 0);
  std::vector<double> loss(trials, 0.0);
  parallel_for(trials, threads, [&](std::size_t t) {
    const auto trial = index32(t, "fano_experiment");
    const std::size_t truth = members.below(ps.size(), trial);
    const Eigen::MatrixXd X = sample_design(ps.design(), ps.d, nn, seed, trial);
    const Eigen::MatrixXd Z = X * theta;
    const Activation act = ps.activation();
    const Eigen::MatrixXd Phi = Z.unaryExpr([act](double z) { return eval_activation(act, z); });
    Eigen::VectorXd Y = noise_vector(nn, seed, sigma, trial);
    for (auto k : ps.codebook.words[truth].support()) Y += c * Phi.col(static_cast<Eigen::Index>(k));
    const std::size_t guess = least_squares_select(ps, Phi, Y);
    wrong[t] = guess != truth;
    loss[t] = guess == truth ? 0.0
                             : packing_separation(ps.codebook.words[guess], ps.codebook.words[truth], ps.v1, ps.L,
                                                  G.entries);
  });

  double loss_sum = 0.0, loss_sq = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    r.errors += static_cast<std::size_t>(wrong[t]);
    loss_sum += loss[t];
    loss_sq += loss[t] * loss[t];
  }
  const double T = static_cast<double>(trials);
  r.empirical_error_prob = static_cast<double>(r.errors) / T;
  r.stderr_error = std::sqrt(r.empirical_error_prob * (1.0 - r.empirical_error_prob) / T);
  r.empirical_risk = loss_sum / T;
  r.stderr_risk = std::sqrt(std::max(0.0, loss_sq / T - r.empirical_risk * r.empirical_risk) / (T - 1.0));

  r.mean_norm_sq = mean_member_norm(ps, threads);
  r.mutual_info_bound = kl_regression(r.mean_norm_sq, n, sigma);
  const auto fano = fano_bound_implied(ps.log_cardinality, r.mutual_info_bound);
  r.implied_alpha = fano.alpha_used;
  r.fano_raw = fano.raw;
  r.fano_prediction = fano.probability;
  r.vacuous = fano.vacuous;
  if (r.implied_alpha > 0.0 && r.implied_alpha < 0.125)
    r.pinsker_prediction = pinsker_bound_from_log(ps.log_cardinality, r.implied_alpha);
  r.risk_lower_bound = risk_from_testing(ps.epsilon, r.fano_prediction);
  r.pass = r.empirical_error_prob >= r.fano_prediction - 3.0 * r.stderr_error;
  r.risk_pass = r.empirical_risk >= r.risk_lower_bound - 3.0 * r.stderr_risk;
  return r;
}

}  // namespace ridgebound
