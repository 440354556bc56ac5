#include "ridgebound/gram.hpp"

#include <cmath>

#include "ridgebound/parallel.hpp"

namespace ridgebound {

std::string to_string(Design design) { return design == Design::uniform_cube ? "uniform-cube" : "gaussian"; }

Design design_from_string(const std::string& name) {
  if (name == "uniform-cube" || name == "uniform") return Design::uniform_cube;
  if (name == "gaussian") return Design::gaussian;
  throw PreconditionError("unknown design '" + name + "' (uniform-cube|gaussian)");
}

double sine_inner_product(const RidgeDirection& a, const RidgeDirection& b) {
  require(a.kind == DirectionKind::lattice && b.kind == DirectionKind::lattice,
          "sine_inner_product: need integer lattice directions");
  require(!a.is_zero() && !b.is_zero(), "sine_inner_product: zero direction");
  require(a.dim() == b.dim(), "sine_inner_product: dimension mismatch");
  if (a.coordinates == b.coordinates) return 1.0;
  if (a == negate(b)) return -1.0;
  return 0.0;
}

GramMatrix sine_gram(const std::vector<RidgeDirection>& dirs) {
  GramMatrix g;
  const auto n = static_cast<Eigen::Index>(dirs.size());
  g.entries.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j)
      g.entries(i, j) = g.entries(j, i) = sine_inner_product(dirs[i], dirs[j]);
  g.design = Design::uniform_cube;
  g.activation = ActivationKind::sine;
  return g;
}

GramMatrix hermite_gram(const std::vector<RidgeDirection>& dirs, int ell, unsigned threads) {
  require(ell >= 1, "hermite_gram: need l >= 1");
  for (const auto& d : dirs) require(d.l2_norm_sq == Rational(1), "hermite_gram: non-unit direction");
  GramMatrix g;
  const auto n = static_cast<Eigen::Index>(dirs.size());
  g.entries.resize(n, n);
  parallel_for(dirs.size(), threads, [&](std::size_t i) {
    const auto ii = static_cast<Eigen::Index>(i);
    g.entries(ii, ii) = 1.0;
    for (std::size_t j = i + 1; j < dirs.size(); ++j) {
      const double value = std::pow(dot(dirs[i], dirs[j]).to_double(), ell);
      g.entries(ii, static_cast<Eigen::Index>(j)) = value;
      g.entries(static_cast<Eigen::Index>(j), ii) = value;
    }
  });
  g.design = Design::gaussian;
  g.activation = ActivationKind::hermite;
  g.ell = ell;
  return g;
}

McEstimate mc_mean(const PointFunction& h, Design design, int d, std::size_t n_samples, std::uint64_t seed,
                   unsigned threads) {
  require(n_samples >= 2, "mc_mean: need at least 2 samples");
  require(n_samples <= 0xFFFFFFFFull, "mc_mean: sample index must fit in 32 bits");
  const CounterRng rng(seed, /*domain=*/0x4D43u);
  const auto blocks = make_blocks(n_samples, 4096);
  std::vector<double> sums(blocks.size()), sumsq(blocks.size());
  // Shifted accumulation around a pilot value keeps the variance numerically stable.
  Eigen::VectorXd x0(d);
  draw_point(design, rng, 0, 0, x0);
  const double pilot = h(x0);
  parallel_for(blocks.size(), threads, [&](std::size_t b) {
    Eigen::VectorXd x(d);
    double s = 0.0, ss = 0.0;
    for (std::size_t i = blocks[b].begin; i < blocks[b].end; ++i) {
      draw_point(design, rng, static_cast<std::uint32_t>(i), 0, x);
      const double v = h(x) - pilot;
      s += v;
      ss += v * v;
    }
    sums[b] = s;
    sumsq[b] = ss;
  });
  double s = 0.0, ss = 0.0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    s += sums[b];
    ss += sumsq[b];
  }
  const double n = static_cast<double>(n_samples);
  const double mean = s / n;
  const double var = std::max(0.0, (ss - n * mean * mean) / (n - 1.0));
  return {pilot + mean, std::sqrt(var / n)};
}

McEstimate mc_l2(const PointFunction& f, const PointFunction& g, Design design, int d, std::size_t n_samples,
                 std::uint64_t seed, unsigned threads) {
  return mc_mean(
      [&](const Eigen::Ref<const Eigen::VectorXd>& x) {
        const double r = f(x) - g(x);
        return r * r;
      },
      design, d, n_samples, seed, threads);
}

McGram mc_gram(const Activation& act, Design design, const Eigen::Ref<const Eigen::MatrixXd>& theta,
               std::size_t n_samples, std::uint64_t seed, unsigned threads) {
  require(n_samples >= 2, "mc_gram: need at least 2 samples");
  require(n_samples <= 0xFFFFFFFFull, "mc_gram: sample index must fit in 32 bits");
  const auto d = theta.rows(), M = theta.cols();
  const CounterRng rng(seed, /*domain=*/0x4D43u);
  const auto blocks = make_blocks(n_samples, 4096);
  std::vector<Eigen::MatrixXd> first(blocks.size()), second(blocks.size());
  parallel_for(blocks.size(), threads, [&](std::size_t b) {
    const auto rows = static_cast<Eigen::Index>(blocks[b].end - blocks[b].begin);
    Eigen::MatrixXd X(rows, d);
    Eigen::VectorXd x(d);
    for (Eigen::Index r = 0; r < rows; ++r) {
      draw_point(design, rng, static_cast<std::uint32_t>(blocks[b].begin + static_cast<std::size_t>(r)), 0, x);
      X.row(r) = x.transpose();
    }
    const Eigen::MatrixXd Phi = (X * theta).unaryExpr([&act](double z) { return eval_activation(act, z); });
    const Eigen::MatrixXd Sq = Phi.cwiseAbs2();
    first[b] = Phi.transpose() * Phi;
    second[b] = Sq.transpose() * Sq;
  });
  Eigen::MatrixXd s1 = Eigen::MatrixXd::Zero(M, M), s2 = Eigen::MatrixXd::Zero(M, M);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    s1 += first[b];
    s2 += second[b];
  }
  const double n = static_cast<double>(n_samples);
  McGram out;
  out.samples = n_samples;
  out.estimate = s1 / n;
  const Eigen::MatrixXd var = ((s2 - n * out.estimate.cwiseAbs2()) / (n - 1.0)).cwiseMax(0.0);
  out.std_error = (var / n).cwiseSqrt();
  return out;
}

}  // namespace ridgebound
