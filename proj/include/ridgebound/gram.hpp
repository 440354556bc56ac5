#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Core>

#include "ridgebound/codes.hpp"
#include "ridgebound/design.hpp"
#include "ridgebound/error.hpp"
#include "ridgebound/lattice.hpp"
#include "ridgebound/ridge.hpp"

namespace ridgebound {

// L2(P) inner products of a ridge family, E[phi(theta_i . X) phi(theta_j . X)].
struct GramMatrix {
  Eigen::MatrixXd entries;
  Design design = Design::uniform_cube;
  ActivationKind activation = ActivationKind::sine;
  int ell = 0;

  Eigen::Index size() const { return entries.rows(); }
};

// E[2 sin(pi theta . X) sin(pi theta' . X)] for X uniform on [-1, 1]^d and
// integer theta, theta' != 0: 1 if equal, -1 if opposite, 0 otherwise.
double sine_inner_product(const RidgeDirection& a, const RidgeDirection& b);

GramMatrix sine_gram(const std::vector<RidgeDirection>& dirs);

// G_ij = (theta_i . theta_j)^l for unit-norm directions under X ~ N(0, I_d).
GramMatrix hermite_gram(const std::vector<RidgeDirection>& dirs, int ell, unsigned threads = 1);

struct Orthonormal {};
inline constexpr Orthonormal orthonormal{};

namespace detail {

// Support of w - w' with signs +1 / -1.
inline void difference_support(const Codeword& a, const Codeword& b, std::vector<std::size_t>& idx,
                               std::vector<double>& sign) {
  idx.clear();
  sign.clear();
  const auto x = a.blocks(), y = b.blocks();
  for (std::size_t blk = 0; blk < x.size(); ++blk) {
    std::uint64_t diff = x[blk] ^ y[blk];
    while (diff) {
      const int bit = __builtin_ctzll(diff);
      const std::size_t i = blk * 64 + static_cast<std::size_t>(bit);
      idx.push_back(i);
      sign.push_back(((x[blk] >> bit) & 1u) ? 1.0 : -1.0);
      diff &= diff - 1;
    }
  }
}

template <typename Derived>
double sparse_quadratic_form(const Eigen::MatrixBase<Derived>& G, const std::vector<std::size_t>& idx,
                             const std::vector<double>& coef) {
  double q = 0.0;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    const auto i = static_cast<Eigen::Index>(idx[a]);
    q += coef[a] * coef[a] * G(i, i);
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      q += 2.0 * coef[a] * coef[b] * G(i, static_cast<Eigen::Index>(idx[b]));
  }
  return q;
}

}  // namespace detail

// ||f_w - f_w'||^2 = (v1/L)^2 (w - w')' G (w - w').
template <typename Derived>
double packing_separation(const Codeword& w, const Codeword& w2, double v1, std::size_t L,
                          const Eigen::MatrixBase<Derived>& G) {
  require(w.length() == w2.length() && static_cast<Eigen::Index>(w.length()) == G.rows() && G.rows() == G.cols(),
          "packing_separation: dimension mismatch");
  thread_local std::vector<std::size_t> idx;
  thread_local std::vector<double> sign;
  detail::difference_support(w, w2, idx, sign);
  const double c = v1 / static_cast<double>(L);
  return c * c * detail::sparse_quadratic_form(G, idx, sign);
}

inline double packing_separation(const Codeword& w, const Codeword& w2, double v1, std::size_t L, Orthonormal) {
  const double c = v1 / static_cast<double>(L);
  return c * c * static_cast<double>(hamming_distance(w, w2));
}

// ||f_w||^2 = (v1/L)^2 w' G w.
template <typename Derived>
double packing_norm(const Codeword& w, double v1, std::size_t L, const Eigen::MatrixBase<Derived>& G) {
  require(w.weight() == L, "packing_norm: codeword weight differs from L");
  require(static_cast<Eigen::Index>(w.length()) == G.rows(), "packing_norm: dimension mismatch");
  const auto support = w.support();
  const std::vector<double> ones(support.size(), 1.0);
  const double c = v1 / static_cast<double>(L);
  return c * c * detail::sparse_quadratic_form(G, support, ones);
}

inline double packing_norm(const Codeword& w, double v1, std::size_t L, Orthonormal) {
  require(w.weight() == L, "packing_norm: codeword weight differs from L");
  return v1 * v1 / static_cast<double>(L);
}

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

using PointFunction = std::function<double(const Eigen::Ref<const Eigen::VectorXd>&)>;

// Sample mean of h(X) with its standard error. Draws are keyed by
// (seed, sample index), so the result does not depend on `threads`.
McEstimate mc_mean(const PointFunction& h, Design design, int d, std::size_t n_samples, std::uint64_t seed,
                   unsigned threads = 1);

// Monte-Carlo estimate of E[(f(X) - g(X))^2].
McEstimate mc_l2(const PointFunction& f, const PointFunction& g, Design design, int d, std::size_t n_samples,
                 std::uint64_t seed, unsigned threads = 1);

struct McGram {
  Eigen::MatrixXd estimate;
  Eigen::MatrixXd std_error;
  std::size_t samples = 0;
};

// Monte-Carlo E[phi(theta_i . X) phi(theta_j . X)] for the columns of `theta` (d x M),
// all entries from one shared sample. Draws match mc_mean's keying.
McGram mc_gram(const Activation& act, Design design, const Eigen::Ref<const Eigen::MatrixXd>& theta,
               std::size_t n_samples, std::uint64_t seed, unsigned threads = 1);

}  // namespace ridgebound
