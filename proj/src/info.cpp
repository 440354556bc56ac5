#include "ridgebound/info.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ridgebound/error.hpp"

namespace ridgebound {

double kl_regression(double norm_sq, std::int64_t n, double sigma) {
  require(norm_sq >= 0.0, "kl_regression: need norm_sq >= 0");
  require(n >= 1, "kl_regression: need n >= 1");
  require(sigma > 0.0, "kl_regression: need sigma > 0");
  return 0.5 * static_cast<double>(n) * norm_sq / (sigma * sigma);
}

namespace {

FanoResult fano_at(double log_cardinality, double alpha, bool implied) {
  FanoResult r;
  r.alpha_used = alpha;
  r.implied_alpha = implied;
  r.raw = 1.0 - (alpha * log_cardinality + std::numbers::ln2) / log_cardinality;
  r.vacuous = r.raw <= 0.0;
  r.probability = std::clamp(r.raw, 0.0, 1.0);
  return r;
}

}  // namespace

FanoResult fano_bound(const InfoBoundInput& in) {
  require(in.log_cardinality > std::numbers::ln2, "fano_bound: log #F0 <= log 2, bound is vacuous");
  require(in.alpha > 0.0 && in.alpha < 1.0, "fano_bound: need 0 < alpha < 1");
  require(in.mutual_info_bound >= 0.0, "fano_bound: need mutual information >= 0");
  if (in.mutual_info_bound <= in.alpha * in.log_cardinality) return fano_at(in.log_cardinality, in.alpha, false);
  return fano_at(in.log_cardinality, in.mutual_info_bound / in.log_cardinality, true);
}

FanoResult fano_bound_implied(double log_cardinality, double mutual_info) {
  require(log_cardinality > std::numbers::ln2, "fano_bound: log #F0 <= log 2, bound is vacuous");
  require(mutual_info >= 0.0, "fano_bound: need mutual information >= 0");
  return fano_at(log_cardinality, mutual_info / log_cardinality, true);
}

double pinsker_bound_from_log(double log_cardinality, double alpha) {
  require(log_cardinality >= std::numbers::ln2, "pinsker_bound: need cardinality >= 2");
  require(alpha > 0.0 && alpha < 0.125, "pinsker_bound: need 0 < alpha < 1/8");
  const double ratio = 1.0 / (1.0 + std::exp(-0.5 * log_cardinality));  // sqrt N / (1 + sqrt N)
  const double value = ratio * (1.0 - 2.0 * alpha - std::sqrt(2.0 * alpha / log_cardinality));
  return std::clamp(value, 0.0, 1.0);
}

double pinsker_bound(double cardinality, double alpha) {
  require(cardinality >= 2.0, "pinsker_bound: need cardinality >= 2");
  return pinsker_bound_from_log(std::log(cardinality), alpha);
}

double risk_from_testing(double eps, double min_prob) {
  require(eps > 0.0, "risk_from_testing: need eps > 0");
  require(min_prob >= 0.0 && min_prob <= 1.0, "risk_from_testing: need 0 <= min_prob <= 1");
  return 0.25 * eps * eps * min_prob;
}

}  // namespace ridgebound
