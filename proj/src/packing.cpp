#include "ridgebound/packing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ridgebound/error.hpp"
#include "ridgebound/parallel.hpp"
#include "ridgebound/rng.hpp"

namespace ridgebound {

std::size_t size_L(double v1, double eps, Family family) {
  require(eps > 0.0, "size_L: need eps > 0");
  require(v1 > 0.0, "size_L: need v1 > 0");
  const double k = family == Family::sine ? 5.0 : 10.0;
  const double L = std::round(v1 * v1 / (k * eps * eps));
  return L < 1.0 ? 1 : static_cast<std::size_t>(L);
}

double hermite_order_threshold(std::size_t L) { return std::log(4.0 * static_cast<double>(L)) / std::log(10.0 / 9.0); }

namespace {

constexpr std::size_t kMaxGramSize = 20'000;

struct PairStats {
  double min_separation = std::numeric_limits<double>::infinity();
  double min_norm = std::numeric_limits<double>::infinity();
  double max_norm = -std::numeric_limits<double>::infinity();
};

bool is_identity(const Eigen::MatrixXd& G) { return G.isIdentity(0.0); }

// Row-wise reductions so results do not depend on thread count.
PairStats pair_stats(const PackingSet& ps, const Eigen::MatrixXd& G, unsigned threads) {
  const auto& words = ps.codebook.words;
  const bool identity = is_identity(G);
  std::vector<double> row_sep(words.size(), std::numeric_limits<double>::infinity());
  std::vector<double> norms(words.size(), std::numeric_limits<double>::quiet_NaN());
  parallel_for(words.size(), threads, [&](std::size_t i) {
    if (words[i].weight() == ps.L)
      norms[i] = identity ? packing_norm(words[i], ps.v1, ps.L, orthonormal) : packing_norm(words[i], ps.v1, ps.L, G);
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      const double s = identity ? packing_separation(words[i], words[j], ps.v1, ps.L, orthonormal)
                                : packing_separation(words[i], words[j], ps.v1, ps.L, G);
      m = std::min(m, s);
    }
    row_sep[i] = m;
  });
  PairStats st;
  for (std::size_t i = 0; i < words.size(); ++i) {
    st.min_separation = std::min(st.min_separation, row_sep[i]);
    if (!std::isnan(norms[i])) {
      st.min_norm = std::min(st.min_norm, norms[i]);
      st.max_norm = std::max(st.max_norm, norms[i]);
    }
  }
  return st;
}

void fill_certificate(PackingSet& ps, unsigned threads) {
  const auto gram = packing_gram(ps, threads);
  const auto st = pair_stats(ps, gram.entries, threads);
  ps.certificate.min_separation = st.min_separation;
  ps.certificate.min_norm = st.min_norm;
  ps.certificate.max_norm = st.max_norm;
  if (ps.family == Family::sine) ps.certificate.common_norm = ps.v1 * ps.v1 / static_cast<double>(ps.L);
}

Codebook packing_code(std::size_t M, std::size_t L, const PackingOptions& options, bool guaranteed) {
  CodeOptions co;
  co.size_guarantee = guaranteed;
  co.seed = options.seed;
  if (options.max_codewords) {
    if (guaranteed)
      require(static_cast<double>(*options.max_codewords) >= code_size_target(M, L),
              "max_codewords below ceil(sqrt(C(M, L)))");
    co.stop_at = options.max_codewords;
  }
  return build_constant_weight_code(M, L, guarantee_min_distance(L), co);
}

}  // namespace

PackingSet build_sine_packing(int d, int v0, double v1, double eps, const PackingOptions& options) {
  require(d >= 1 && v0 >= 1, "sine packing: need d, v0 >= 1");
  require(v1 > 0.0, "sine packing: need v1 > 0");
  PackingSet ps;
  ps.family = Family::sine;
  ps.d = d;
  ps.v0 = v0;
  ps.v1 = v1;
  ps.requested_epsilon = eps;
  ps.directions = enumerate_l1_lattice(d, v0, /*canonical=*/true);
  const std::size_t M = ps.directions.size();
  require(M >= 10, "sine packing: canonical lattice count M = " + std::to_string(M) + " violates M >= 10");
  ps.L = size_L(v1, eps, Family::sine);
  const double sqrtM = std::sqrt(static_cast<double>(M));
  require(static_cast<double>(ps.L) <= sqrtM,
          "sine packing: L = " + std::to_string(ps.L) + " violates L <= sqrt(M) = " + std::to_string(sqrtM));
  require(10 * ps.L <= M, "sine packing: L = " + std::to_string(ps.L) + " violates L <= M/10 = " +
                              std::to_string(static_cast<double>(M) / 10.0));
  ps.epsilon = v1 / std::sqrt(5.0 * static_cast<double>(ps.L));
  ps.codebook = packing_code(M, ps.L, options, /*guaranteed=*/true);
  ps.log_cardinality = std::log(static_cast<double>(ps.codebook.size()));

  const double Ld = static_cast<double>(ps.L), Md = static_cast<double>(M);
  const auto bounds = lattice_count_bounds(d, v0);
  ps.metadata["canonical"] = 1.0;
  ps.metadata["M"] = Md;
  ps.metadata["lattice_full_count"] = static_cast<double>(l1_lattice_count(d, v0));
  ps.metadata["lattice_binomial_count"] = bounds.binomial_count();
  ps.metadata["log_cardinality_target"] = 0.25 * Ld * std::log(Md);
  ps.metadata["eps_floor_sqrtM"] = v1 / std::sqrt(5.0 * sqrtM);  // L <= sqrt(M)
  ps.metadata["eps_floor_M_quarter"] = v1 * std::pow(Md, -0.25);
  const double base = d >= v0 ? 1.0 + static_cast<double>(d) / v0 : 1.0 + static_cast<double>(v0) / d;
  const double power = d >= v0 ? v0 : d;
  ps.metadata["eps_threshold_quarter"] = v1 / std::pow(base, power / 4.0);
  ps.metadata["eps_threshold_half"] = v1 / std::pow(base, power / 2.0);
  if (eps < ps.metadata["eps_floor_M_quarter"])
    ps.warnings.push_back("eps below v1 * M^(-1/4); accepted because L <= sqrt(M) holds");

  fill_certificate(ps, options.threads);
  if (ps.log_cardinality < ps.metadata["log_cardinality_target"])
    throw ConvergenceError("sine packing: log #A below (L/4) log M");
  return ps;
}

PackingSet build_hermite_packing(int d, int v0, double v1, double eps, int ell, const PackingOptions& options) {
  require(d >= 10, "hermite packing: need d >= 10");
  require(v0 >= 1, "hermite packing: need v0 >= 1");
  require(10 * v0 * v0 <= d, "hermite packing: need v0^2 <= d/10");
  require(v1 > 0.0, "hermite packing: need v1 > 0");
  PackingSet ps;
  ps.family = Family::hermite;
  ps.ell = ell;
  ps.d = d;
  ps.v0 = v0;
  ps.v1 = v1;
  ps.requested_epsilon = eps;
  ps.L = size_L(v1, eps, Family::hermite);
  const double threshold = hermite_order_threshold(ps.L);
  require(static_cast<double>(ell) > threshold, "hermite packing: order l = " + std::to_string(ell) +
                                                    " violates l > log(4L)/log(10/9) = " + std::to_string(threshold));

  const auto v0sq = static_cast<std::size_t>(v0 * v0);
  CodeOptions dir_opts;
  dir_opts.size_guarantee = true;
  dir_opts.seed = options.seed;
  dir_opts.stop_at = options.max_directions;
  const auto direction_code = build_constant_weight_code(static_cast<std::size_t>(d), v0sq, guarantee_min_distance(v0sq), dir_opts);
  if (direction_code.size() > kMaxGramSize)
    throw CapExceededError("hermite packing: " + std::to_string(direction_code.size()) +
                           " directions exceed the Gram cap; set max_directions");
  ps.directions = hermite_directions(direction_code, v0, d);
  const std::size_t M = ps.directions.size();
  const double sqrtM = std::sqrt(static_cast<double>(M));
  require(static_cast<double>(ps.L) <= sqrtM,
          "hermite packing: L = " + std::to_string(ps.L) + " violates L <= sqrt(M) = " + std::to_string(sqrtM));
  ps.epsilon = v1 / std::sqrt(10.0 * static_cast<double>(ps.L));
  const bool guaranteed = M >= 10 && 10 * ps.L <= M;
  ps.codebook = packing_code(M, ps.L, options, guaranteed);
  ps.log_cardinality = std::log(static_cast<double>(ps.codebook.size()));

  ps.metadata["M"] = static_cast<double>(M);
  ps.metadata["direction_code_min_distance"] = static_cast<double>(direction_code.min_distance);
  ps.metadata["hermite_order_threshold"] = threshold;
  ps.metadata["separation_bound"] = v1 * v1 / (10.0 * static_cast<double>(ps.L));
  const double e = ps.epsilon;
  ps.metadata["log_cardinality_target"] =
      (static_cast<double>(v0) * v1 / e) * (static_cast<double>(v0) * v1 / e) * std::log(static_cast<double>(d) / static_cast<double>(v0sq));
  ps.metadata["eps_floor_sqrtM"] = v1 / std::sqrt(10.0 * sqrtM);
  ps.metadata["eps_floor_M_quarter"] = v1 * std::pow(static_cast<double>(M), -0.25);
  if (!guaranteed) ps.warnings.push_back("L > M/10: codebook size guarantee does not apply");

  fill_certificate(ps, options.threads);
  return ps;
}

GramMatrix packing_gram(const PackingSet& ps, unsigned threads) {
  require(ps.directions.size() <= kMaxGramSize, "packing_gram: too many directions");
  if (ps.family == Family::sine) return sine_gram(ps.directions);
  return hermite_gram(ps.directions, ps.ell, threads);
}

PackingReport certify_packing(const PackingSet& ps, unsigned threads) {
  PackingReport report;
  const auto code_report = verify_codebook(ps.codebook, threads);
  for (const auto& c : code_report.checks) report.add("codebook_" + c.name, c.passed, c.detail);

  report.add("codebook_weight_is_L", ps.codebook.weight == ps.L,
             "codebook weight " + std::to_string(ps.codebook.weight) + " vs L " + std::to_string(ps.L));
  report.add("codebook_length_is_M", ps.codebook.length == ps.directions.size(),
             "word length matches the number of directions");
  if (!report.find("codebook_length_is_M")->passed || !report.find("codebook_length")->passed) return report;

  // outer l1 norm: L coefficients of v1/L each, as the exact ratio weight/L
  bool outer_ok = ps.L > 0;
  for (const auto& w : ps.codebook.words)
    outer_ok = outer_ok && Rational(static_cast<std::int64_t>(w.weight()), static_cast<std::int64_t>(ps.L)) == Rational(1);
  report.add("outer_l1_equals_v1", outer_ok, "sum of |c1| = (v1/L) * weight = v1 for every member");

  bool inner_ok = true;
  for (const auto& dir : ps.directions) inner_ok = inner_ok && dir.l1_norm <= Rational(ps.v0) && dir.dim() == static_cast<std::size_t>(ps.d);
  report.add("inner_l1_le_v0", inner_ok, "every direction has l1 norm <= v0 and dimension d");

  if (ps.family == Family::sine) {
    bool canonical = true;
    for (const auto& dir : ps.directions) canonical = canonical && dir.kind == DirectionKind::lattice && !dir.is_zero();
    report.add("directions_nonzero_lattice", canonical, "sine directions are nonzero integer points");
    if (!canonical) return report;
  } else {
    bool unit = true;
    for (const auto& dir : ps.directions) unit = unit && dir.l2_norm_sq == Rational(1);
    report.add("directions_unit_norm", unit, "hermite directions have unit l2 norm");
    const double threshold = hermite_order_threshold(ps.L);
    report.add("hermite_order", ps.ell > threshold,
               "l = " + std::to_string(ps.ell) + " vs log(4L)/log(10/9) = " + std::to_string(threshold));
    if (!unit || ps.ell < 1) return report;
  }

  const auto gram = packing_gram(ps, threads);
  if (ps.family == Family::sine)
    report.add("sine_gram_identity", gram.entries.isIdentity(0.0), "no direction pair theta' = +-theta");

  const auto st = pair_stats(ps, gram.entries, threads);
  report.min_separation = st.min_separation;
  report.min_norm = st.min_norm;
  report.max_norm = st.max_norm;

  const double eps_sq = ps.epsilon * ps.epsilon;
  report.add("min_separation", ps.size() < 2 || st.min_separation >= eps_sq * (1.0 - 1e-12),
             "min separation " + std::to_string(st.min_separation) + " vs eps^2 " + std::to_string(eps_sq));
  if (ps.family == Family::hermite) {
    const double bound = ps.v1 * ps.v1 / (10.0 * static_cast<double>(ps.L));
    report.add("hermite_separation_bound", ps.size() < 2 || st.min_separation >= bound * (1.0 - 1e-12),
               "min separation vs v1^2/(10L) = " + std::to_string(bound));
  }

  const auto rel = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b)); };
  if (ps.family == Family::sine) {
    const double expected = ps.v1 * ps.v1 / static_cast<double>(ps.L);
    report.add("member_norms", rel(st.min_norm, expected) && rel(st.max_norm, expected),
               "every ||f_w||^2 equals v1^2/L = " + std::to_string(expected));
  } else {
    report.add("member_norms", rel(st.min_norm, ps.certificate.min_norm) && rel(st.max_norm, ps.certificate.max_norm),
               "recomputed norms match the stored certificate");
  }
  report.add("certificate_separation",
             ps.size() < 2 || rel(st.min_separation, ps.certificate.min_separation),
             "stored min separation matches recomputation");
  report.add("log_cardinality", std::abs(ps.log_cardinality - std::log(static_cast<double>(ps.size()))) <= 1e-12,
             "log_cardinality equals log of the codebook size");
  const double M = static_cast<double>(ps.directions.size());
  if (static_cast<double>(ps.L) <= std::sqrt(M) && 10 * ps.L <= ps.directions.size())
    report.add("log_cardinality_target", ps.log_cardinality >= 0.25 * static_cast<double>(ps.L) * std::log(M),
               "log #A >= (L/4) log M");
  return report;
}

Eigen::MatrixXd feature_matrix(const PackingSet& ps, const Eigen::Ref<const Eigen::MatrixXd>& X) {
  require(X.cols() == ps.d, "feature_matrix: design has wrong dimension");
  Eigen::MatrixXd theta(ps.d, static_cast<Eigen::Index>(ps.directions.size()));
  for (std::size_t k = 0; k < ps.directions.size(); ++k) theta.col(static_cast<Eigen::Index>(k)) = ps.directions[k].to_vector();
  const Eigen::MatrixXd z = X * theta;
  const Activation act = ps.activation();
  return z.unaryExpr([act](double v) { return eval_activation(act, v); });
}

PointFunction member_function(const PackingSet& ps, std::size_t index) {
  require(index < ps.size(), "member_function: index out of range");
  std::vector<Eigen::VectorXd> thetas;
  for (auto k : ps.codebook.words[index].support()) thetas.push_back(ps.directions[k].to_vector());
  const double c = ps.v1 / static_cast<double>(ps.L);
  const Activation act = ps.activation();
  return [thetas = std::move(thetas), c, act](const Eigen::Ref<const Eigen::VectorXd>& x) {
    double s = 0.0;
    for (const auto& t : thetas) s += eval_activation(act, t.dot(x));
    return c * s;
  };
}

std::vector<SpotCheck> mc_spot_check(const PackingSet& ps, std::size_t pairs, std::size_t samples, std::uint64_t seed,
                                     unsigned threads) {
  require(ps.size() >= 2, "mc_spot_check: need at least two members");
  const auto gram = packing_gram(ps, threads);
  const CounterRng pick(seed, /*domain=*/0x5350u);
  std::vector<SpotCheck> out;
  for (std::size_t p = 0; p < pairs; ++p) {
    SpotCheck sc;
    sc.i = pick.below(ps.size(), static_cast<std::uint32_t>(p), 0);
    sc.j = pick.below(ps.size() - 1, static_cast<std::uint32_t>(p), 1);
    if (sc.j >= sc.i) ++sc.j;
    sc.analytic = packing_separation(ps.codebook.words[sc.i], ps.codebook.words[sc.j], ps.v1, ps.L, gram.entries);
    sc.mc = mc_l2(member_function(ps, sc.i), member_function(ps, sc.j), ps.design(), ps.d, samples, seed + 1 + p, threads);
    sc.within_3se = std::abs(sc.mc.estimate - sc.analytic) <= 3.0 * sc.mc.std_error;
    out.push_back(sc);
  }
  return out;
}

}  // namespace ridgebound
