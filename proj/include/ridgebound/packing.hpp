#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "ridgebound/codes.hpp"
#include "ridgebound/design.hpp"
#include "ridgebound/gram.hpp"
#include "ridgebound/lattice.hpp"
#include "ridgebound/ridge.hpp"
#include "ridgebound/verification.hpp"

namespace ridgebound {

struct PackingCertificate {
  double min_separation = 0.0;
  double min_norm = 0.0;
  double max_norm = 0.0;
  std::optional<double> common_norm;  // v1^2 / L for sine packings
};

// F0 = { f_w = (v1/L) sum_k w_k phi(theta_k . x) : w in A }.
struct PackingSet {
  Family family = Family::sine;
  int ell = 0;  // hermite order
  int d = 0;
  int v0 = 0;
  double v1 = 1.0;
  // Separation level realized by the integer L: v1/sqrt(5L) (sine), v1/sqrt(10L) (hermite).
  double epsilon = 0.0;
  double requested_epsilon = 0.0;
  std::size_t L = 0;
  std::vector<RidgeDirection> directions;
  Codebook codebook;
  double log_cardinality = 0.0;
  PackingCertificate certificate;
  std::map<std::string, double> metadata;
  std::vector<std::string> warnings;

  std::size_t size() const { return codebook.size(); }
  Design design() const { return family == Family::sine ? Design::uniform_cube : Design::gaussian; }
  Activation activation() const { return family == Family::sine ? Activation::sine() : Activation::hermite(ell); }
};

// L = round((v1 / (sqrt(5) eps))^2) for sine, round((v1 / (sqrt(10) eps))^2) for hermite; at least 1.
std::size_t size_L(double v1, double eps, Family family);

// Smallest admissible hermite order is the first integer above log(4L) / log(10/9).
double hermite_order_threshold(std::size_t L);

struct PackingOptions {
  // Cap on |A|; must not undercut ceil(sqrt(C(M, L))) when that guarantee applies.
  std::optional<std::size_t> max_codewords;
  // Cap on the number of Hermite directions (the code C of length d); full greedy code when empty.
  std::optional<std::size_t> max_directions;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

PackingSet build_sine_packing(int d, int v0, double v1, double eps, const PackingOptions& options = {});
PackingSet build_hermite_packing(int d, int v0, double v1, double eps, int ell, const PackingOptions& options = {});

// Inner-product matrix of the packing's dictionary (sine rule or (theta . theta')^l).
GramMatrix packing_gram(const PackingSet& ps, unsigned threads = 1);

struct PackingReport : VerificationReport {
  double min_separation = 0.0;
  double min_norm = 0.0;
  double max_norm = 0.0;
};

// Re-derives every invariant and the certificate from the stored words and directions.
PackingReport certify_packing(const PackingSet& ps, unsigned threads = 1);

// n x M matrix of phi(theta_k . x_i).
Eigen::MatrixXd feature_matrix(const PackingSet& ps, const Eigen::Ref<const Eigen::MatrixXd>& X);

// f_w for member `index`.
PointFunction member_function(const PackingSet& ps, std::size_t index);

struct SpotCheck {
  std::size_t i = 0, j = 0;
  double analytic = 0.0;
  McEstimate mc;
  bool within_3se = false;
};

// Monte-Carlo ||f_i - f_j||^2 for `pairs` seeded random member pairs.
std::vector<SpotCheck> mc_spot_check(const PackingSet& ps, std::size_t pairs, std::size_t samples, std::uint64_t seed,
                                     unsigned threads = 1);

}  // namespace ridgebound
