#pragma once

#include <cstdint>

namespace ridgebound {

// All information quantities are in nats.

// D(p^n_f || p^n_0) = (n / 2 sigma^2) ||f||^2 for Gaussian regression noise.
double kl_regression(double norm_sq, std::int64_t n, double sigma = 1.0);

struct InfoBoundInput {
  double log_cardinality = 0.0;    // log #F0
  double mutual_info_bound = 0.0;  // average KL to the reference density, nats
  double alpha = 0.5;
};

struct FanoResult {
  double probability = 0.0;  // clipped to [0, 1]
  double raw = 0.0;          // 1 - alpha - log 2 / log #F0 before clipping
  double alpha_used = 0.0;
  bool implied_alpha = false;  // mutual information exceeded alpha * log #F0
  bool vacuous = false;        // raw <= 0
};

// 1 - (alpha log #F0 + log 2) / log #F0. When the mutual information exceeds
// alpha log #F0 the implied alpha = MI / log #F0 is used instead and flagged.
FanoResult fano_bound(const InfoBoundInput& input);

// Fano bound at the implied alpha = MI / log #F0 (may be >= 1).
FanoResult fano_bound_implied(double log_cardinality, double mutual_info);

// (sqrt N / (1 + sqrt N)) (1 - 2 alpha - sqrt(2 alpha / log N)), 0 < alpha < 1/8.
double pinsker_bound(double cardinality, double alpha);
double pinsker_bound_from_log(double log_cardinality, double alpha);

// (eps^2 / 4) * min_prob
double risk_from_testing(double eps, double min_prob);

}  // namespace ridgebound
