#include "ridgebound/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <memory>
#include <numbers>

#include <CLI11.hpp>

#include "ridgebound/codes.hpp"
#include "ridgebound/error.hpp"
#include "ridgebound/gram.hpp"
#include "ridgebound/lattice.hpp"
#include "ridgebound/manifest.hpp"
#include "ridgebound/packing.hpp"
#include "ridgebound/rates.hpp"
#include "ridgebound/rng.hpp"
#include "ridgebound/serialize.hpp"
#include "ridgebound/simulate.hpp"
#include "ridgebound/variation.hpp"

#ifndef RIDGEBOUND_VERSION
#define RIDGEBOUND_VERSION "0.0.0"
#endif

namespace ridgebound::cli {

namespace {

unsigned default_threads() {
  if (const char* env = std::getenv("RIDGEBOUND_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0) return static_cast<unsigned>(v);
  }
  return 0;
}

struct Common {
  unsigned threads = default_threads();
  std::string out;
};

struct Run {
  RunManifest manifest;
  Common common;

  unsigned threads() const { return common.threads; }

  void add_input(const std::string& path, const std::string& contents) {
    manifest.input_digests[path] = sha256_hex(contents);
  }

  void write_output(const std::string& path, const std::string& text) {
    write_file(path, text);
    manifest.output_digests[path] = sha256_hex(text);
  }

  Json stamped(const Json& doc) const {
    Json j{{"manifest_id", manifest.id()}};
    for (const auto& [k, v] : doc.items()) j[k] = v;
    return j;
  }

  // Primary output: --out file (plus sidecar manifest) or stdout.
  void emit_text(const std::string& text) {
    if (common.out.empty()) {
      std::cout << text;
      return;
    }
    write_output(common.out, text);
    finish();
  }
  void emit(const Json& doc) { emit_text(stamped(doc).dump(2) + "\n"); }

  void finish() {
    if (common.out.empty()) return;
    manifest.timestamp = utc_timestamp();
    write_file(common.out + ".manifest.json", to_json(manifest).dump(2) + "\n");
  }
};

using Handler = std::function<int(Run&)>;

struct Registry {
  Handler handler;
  CLI::App* leaf = nullptr;
  std::string command;
  Common common;
};

CLI::App* leaf(CLI::App& parent, Registry& reg, const std::string& name, const std::string& description,
               const std::string& command, Handler handler) {
  auto* sub = parent.add_subcommand(name, description);
  sub->add_option("--threads", reg.common.threads, "Worker threads (0 = all cores; env RIDGEBOUND_THREADS)");
  sub->add_option("--out", reg.common.out, "Output file (stdout when omitted)");
  sub->callback([&reg, sub, command, handler] {
    reg.leaf = sub;
    reg.command = command;
    reg.handler = handler;
  });
  return sub;
}

// Every option of the leaf except --help and those naming outputs or threads, given or default.
Json collect_parameters(CLI::App* sub) {
  Json params = Json::object();
  for (const auto* opt : sub->get_options()) {
    const std::string name = opt->get_single_name();
    if (name.empty() || name == "help" || name == "threads" || name == "out" || name == "gram") continue;
    if (opt->get_type_size() == 0) {
      params[name] = opt->count() > 0;
      continue;
    }
    if (opt->count() > 0) {
      const auto& res = opt->results();
      if (res.size() == 1)
        params[name] = res.front();
      else
        params[name] = res;
    } else {
      params[name] = opt->get_default_str();
    }
  }
  return params;
}

RateConstants parse_constants(const std::vector<std::string>& assignments) {
  RateConstants c;
  for (const auto& a : assignments) {
    const auto eq = a.find('=');
    require(eq != std::string::npos && eq > 0, "constant '" + a + "' is not of the form name=value");
    const std::string value = a.substr(eq + 1);
    char* end = nullptr;
    double v = std::strtod(value.c_str(), &end);
    if (value == "1/3")
      v = 1.0 / 3.0;
    else if (value == "1/4")
      v = 0.25;
    else
      require(end != value.c_str() && *end == '\0', "constant '" + a + "' has a non-numeric value");
    c.set(a.substr(0, eq), v);
  }
  return c;
}

struct RateArgs {
  std::string family = "sine";
  double d = 0, v0 = 0, v1 = 1, n = 0;
  int ell = 0;
  std::vector<std::string> constants;

  RateQuery query() const {
    RateQuery q;
    q.family = family_from_string(family);
    q.d = d;
    q.v0 = v0;
    q.v1 = v1;
    q.n = n;
    if (ell > 0) q.ell = ell;
    q.constants = parse_constants(constants);
    return q;
  }
};

void add_rate_options(CLI::App* sub, RateArgs& a) {
  sub->add_option("--family", a.family, "sine | hermite")->capture_default_str();
  sub->add_option("--d", a.d, "Ambient dimension")->required();
  sub->add_option("--v0", a.v0, "Inner l1 bound")->required();
  sub->add_option("--v1", a.v1, "Outer l1 bound")->capture_default_str();
  sub->add_option("--n", a.n, "Sample size")->required();
  sub->add_option("--ell", a.ell, "Hermite order (0 = unset)")->capture_default_str();
  sub->add_option("--const", a.constants, "Override a constant, name=value (c1..c10, c4_upper, c_ell, gamma)");
}

PackingSet load_packing(Run& run, const std::string& path) {
  const std::string text = read_file(path);
  run.add_input(path, text);
  return packing_from_json(Json::parse(text));
}

Eigen::MatrixXd direction_matrix(const std::vector<RidgeDirection>& dirs, int d) {
  Eigen::MatrixXd theta(d, static_cast<Eigen::Index>(dirs.size()));
  for (std::size_t k = 0; k < dirs.size(); ++k) theta.col(static_cast<Eigen::Index>(k)) = dirs[k].to_vector();
  return theta;
}

}  // namespace

int dispatch(const std::vector<std::string>& args) {
  CLI::App app{"Packing sets, information bounds and minimax rates for ridge combinations", "ridgebound"};
  app.require_subcommand(1);
  app.set_version_flag("--version", RIDGEBOUND_VERSION);
  Registry reg;

  // codebook
  struct {
    std::size_t M = 0, L = 0, min_distance = 0, stop_at = 0;
    std::uint64_t seed = 0, enumeration_cap = 10'000'000;
    bool no_guarantee = false;
  } cb;
  {
    auto* sub = leaf(app, reg, "codebook", "Build and verify a constant-weight code", "codebook", [&](Run& run) {
      CodeOptions opt;
      opt.size_guarantee = !cb.no_guarantee;
      opt.seed = cb.seed;
      opt.enumeration_cap = cb.enumeration_cap;
      if (cb.stop_at > 0) opt.stop_at = cb.stop_at;
      run.manifest.seed = cb.seed;
      const std::size_t dist = cb.min_distance > 0 ? cb.min_distance : guarantee_min_distance(cb.L);
      const auto code = build_constant_weight_code(cb.M, cb.L, dist, opt);
      const auto report = verify_codebook(code, run.threads());
      Json doc = to_json(code);
      if (opt.size_guarantee) doc["size_target"] = code_size_target(cb.M, cb.L);
      doc["verification"] = to_json(report);
      run.emit(doc);
      return report.pass() ? kExitOk : kExitVerificationFailed;
    });
    sub->add_option("--M", cb.M, "Word length")->required();
    sub->add_option("--L", cb.L, "Word weight")->required();
    sub->add_option("--min-distance", cb.min_distance, "Minimum distance (0 = ceil(L/5))")->capture_default_str();
    sub->add_option("--seed", cb.seed, "Seed for random-rejection mode")->capture_default_str();
    sub->add_option("--enumeration-cap", cb.enumeration_cap, "Largest C(M, L) scanned exhaustively")
        ->capture_default_str();
    sub->add_option("--stop-at", cb.stop_at, "Stop after this many words (0 = full scan)")->capture_default_str();
    sub->add_flag("--no-guarantee", cb.no_guarantee, "Skip the size-guarantee preconditions");
  }

  // lattice
  struct {
    int d = 0, v0 = 0;
    bool full = false, counts_only = false;
  } lat;
  {
    auto* sub = leaf(app, reg, "lattice", "Enumerate integer directions with l1 norm <= v0", "lattice", [&](Run& run) {
      const auto bounds = lattice_count_bounds(lat.d, lat.v0);
      const auto exact = l1_lattice_count(lat.d, lat.v0);
      Json counts{{"exact_with_origin", exact},
                  {"nonzero", exact - 1},
                  {"canonical", (exact - 1) / 2},
                  {"binomial_count", number_or_null(bounds.binomial_count())},
                  {"binomial_minus_exact", number_or_null(bounds.binomial_count() - static_cast<double>(exact))},
                  {"lower_large_d", number_or_null(bounds.lower_large_d())},
                  {"lower_large_v0", number_or_null(bounds.lower_large_v0())}};
      Json doc{{"d", lat.d}, {"v0", lat.v0}, {"canonical", !lat.full}, {"counts", std::move(counts)}};
      if (!lat.counts_only) doc["directions"] = directions_to_json(enumerate_l1_lattice(lat.d, lat.v0, !lat.full), lat.d, lat.v0);
      run.emit(doc);
      return kExitOk;
    });
    sub->add_option("--d", lat.d, "Dimension")->required();
    sub->add_option("--v0", lat.v0, "l1 radius")->required();
    sub->add_flag("--full", lat.full, "Every integer point of the ball (origin included) instead of the canonical half");
    sub->add_flag("--counts-only", lat.counts_only, "Omit the direction list");
  }

  // packing
  auto* packing = app.add_subcommand("packing", "Packing sets of ridge combinations");
  packing->require_subcommand(1);
  struct {
    std::string family;
    int d = 0, v0 = 0, ell = 0;
    double v1 = 1.0, eps = 0.0;
    std::size_t L = 0, max_codewords = 0, max_directions = 0;
    std::uint64_t seed = 0;
    std::string gram;
  } pb;
  {
    auto* sub = leaf(*packing, reg, "build", "Construct and certify a packing set", "packing build", [&](Run& run) {
      const auto family = family_from_string(pb.family);
      const double k = family == Family::sine ? 5.0 : 10.0;
      require((pb.eps > 0.0) != (pb.L > 0), "give exactly one of --eps and --L");
      const double eps = pb.eps > 0.0 ? pb.eps : pb.v1 / std::sqrt(k * static_cast<double>(pb.L));
      PackingOptions opt;
      opt.seed = pb.seed;
      opt.threads = run.threads();
      if (pb.max_codewords > 0) opt.max_codewords = pb.max_codewords;
      if (pb.max_directions > 0) opt.max_directions = pb.max_directions;
      run.manifest.seed = pb.seed;
      const auto ps = family == Family::sine ? build_sine_packing(pb.d, pb.v0, pb.v1, eps, opt)
                                             : build_hermite_packing(pb.d, pb.v0, pb.v1, eps, pb.ell, opt);
      if (!pb.gram.empty()) {
        const auto g = packing_gram(ps, run.threads());
        run.write_output(pb.gram, gram_to_csv(g));
        Json meta{{"rows", g.entries.rows()},
                  {"cols", g.entries.cols()},
                  {"design", to_string(g.design)},
                  {"activation", to_string(g.activation)},
                  {"ell", g.ell},
                  {"csv", pb.gram}};
        run.write_output(pb.gram + ".json", run.stamped(meta).dump(2) + "\n");
      }
      run.emit(to_json(ps));
      return kExitOk;
    });
    sub->add_option("--family", pb.family, "sine | hermite")->required();
    sub->add_option("--d", pb.d, "Dimension")->required();
    sub->add_option("--v0", pb.v0, "Inner l1 bound")->required();
    sub->add_option("--v1", pb.v1, "Outer l1 bound")->capture_default_str();
    auto* eps = sub->add_option("--eps", pb.eps, "Target separation eps");
    auto* L = sub->add_option("--L", pb.L, "Codeword weight (sets eps = v1/sqrt(5L), or sqrt(10L) for hermite)");
    eps->excludes(L);
    sub->add_option("--ell", pb.ell, "Hermite order")->capture_default_str();
    sub->add_option("--seed", pb.seed, "Seed")->capture_default_str();
    sub->add_option("--max-codewords", pb.max_codewords, "Cap on #A (0 = none)")->capture_default_str();
    sub->add_option("--max-directions", pb.max_directions, "Cap on Hermite directions (0 = none)")->capture_default_str();
    sub->add_option("--gram", pb.gram, "Also write the dictionary Gram matrix as CSV (+ .json metadata)");
  }
  std::string certify_path;
  {
    auto* sub = leaf(*packing, reg, "certify", "Re-verify a packing file", "packing certify", [&](Run& run) {
      PackingReport report;
      try {
        const auto ps = load_packing(run, certify_path);
        report = certify_packing(ps, run.threads());
      } catch (const std::exception& e) {
        report.add("load", false, e.what());
      }
      run.emit(to_json(report));
      return report.pass() ? kExitOk : kExitVerificationFailed;
    });
    sub->add_option("--packing", certify_path, "Packing JSON")->required()->check(CLI::ExistingFile);
  }

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Minimax rate formulas and conditions");
  bounds->require_subcommand(1);
  RateArgs ra;
  {
    auto* sub = leaf(*bounds, reg, "rate", "Closed-form and matched rate for one query", "bounds rate", [&](Run& run) {
      run.emit(to_json(compute_rate(ra.query())));
      return kExitOk;
    });
    add_rate_options(sub, ra);
  }
  {
    auto* sub = leaf(*bounds, reg, "conditions", "Evaluate the regime conditions", "bounds conditions", [&](Run& run) {
      const auto q = ra.query();
      Json conds = Json::object();
      for (const auto& [k, v] : check_conditions(q)) conds[k] = to_json(v);
      run.emit(Json{{"family", to_string(q.family)},
                    {"regime", to_string(q.regime())},
                    {"conditions", std::move(conds)},
                    {"constants", to_json(q.constants)}});
      return kExitOk;
    });
    add_rate_options(sub, ra);
  }
  {
    auto* sub = leaf(*bounds, reg, "curves", "Reference upper and lower curves", "bounds curves", [&](Run& run) {
      const auto q = ra.query();
      Json curves = Json::object();
      for (const auto& [k, v] : comparison_curves(q)) curves[k] = number_or_null(v);
      run.emit(Json{{"d", q.d}, {"v0", q.v0}, {"v1", q.v1}, {"n", q.n}, {"curves", std::move(curves)},
                    {"constants", to_json(q.constants)}});
      return kExitOk;
    });
    add_rate_options(sub, ra);
  }
  struct {
    std::vector<double> d, v0, v1{1.0}, n;
    int ell = 0;
    std::vector<std::string> constants;
  } tab;
  {
    auto* sub = leaf(*bounds, reg, "table", "CSV grid of curves and condition slacks", "bounds table", [&](Run& run) {
      RateGrid grid{tab.d, tab.v0, tab.v1, tab.n, std::nullopt};
      if (tab.ell > 0) grid.ell = tab.ell;
      run.emit_text(rate_table_to_csv(rate_table(grid, parse_constants(tab.constants), run.threads())));
      return kExitOk;
    });
    sub->add_option("--d", tab.d, "Dimensions (comma separated)")->required()->delimiter(',');
    sub->add_option("--v0", tab.v0, "Inner bounds")->required()->delimiter(',');
    sub->add_option("--v1", tab.v1, "Outer bounds")->delimiter(',')->capture_default_str();
    sub->add_option("--n", tab.n, "Sample sizes")->required()->delimiter(',');
    sub->add_option("--ell", tab.ell, "Hermite order (0 = unset)")->capture_default_str();
    sub->add_option("--const", tab.constants, "Override a constant, name=value");
  }

  // verify
  auto* verify = app.add_subcommand("verify", "Numerical verification experiments");
  verify->require_subcommand(1);
  struct {
    double v = std::numbers::pi, tol = 1e-8, abs_tol = 1e-10;
    int grid = 41, v0 = 1;
  } vi;
  {
    auto* sub = leaf(*verify, reg, "identities", "Quadrature residuals of the sgn/clip integral identities",
                     "verify identities", [&](Run& run) {
                       QuadratureConfig cfg;
                       cfg.abs_tol = vi.abs_tol;
                       Json ids = Json::array();
                       bool pass = true;
                       for (const auto id : {Identity::sin_sgn, Identity::cos_sgn, Identity::sin_clip}) {
                         const auto r = verify_identity_grid(id, vi.v, vi.grid, cfg, run.threads());
                         pass = pass && r.max_residual < vi.tol;
                         ids.push_back(to_json(r));
                       }
                       run.emit(Json{{"v", vi.v},
                                     {"grid", vi.grid},
                                     {"tol", vi.tol},
                                     {"abs_tol", vi.abs_tol},
                                     {"pass", pass},
                                     {"identities", std::move(ids)},
                                     {"variation_v0", vi.v0},
                                     {"variation_constants", to_json(variation_constants(vi.v0, cfg))}});
                       return pass ? kExitOk : kExitVerificationFailed;
                     });
    sub->add_option("--v", vi.v, "Scale v of the identities")->capture_default_str();
    sub->add_option("--grid", vi.grid, "Grid points on [-v, v]")->capture_default_str();
    sub->add_option("--tol", vi.tol, "Residual tolerance")->capture_default_str();
    sub->add_option("--abs-tol", vi.abs_tol, "Quadrature tolerance")->capture_default_str();
    sub->add_option("--v0", vi.v0, "v0 for the variation constants")->capture_default_str();
  }
  struct {
    int d = 5, v0 = 2;
    std::size_t samples = 100'000;
    std::uint64_t seed = 1;
    bool full = false;
  } vo;
  {
    auto* sub = leaf(*verify, reg, "orthonormality", "Monte-Carlo check of the sine inner-product rule",
                     "verify orthonormality", [&](Run& run) {
                       run.manifest.seed = vo.seed;
                       auto dirs = enumerate_l1_lattice(vo.d, vo.v0, !vo.full);
                       std::erase_if(dirs, [](const RidgeDirection& r) { return r.is_zero(); });
                       const auto analytic = sine_gram(dirs).entries;
                       const auto mc = mc_gram(Activation::sine(), Design::uniform_cube, direction_matrix(dirs, vo.d),
                                               vo.samples, vo.seed, run.threads());
                       Json pairs = Json::array();
                       std::size_t failures = 0;
                       double max_z = 0.0;
                       for (Eigen::Index i = 0; i < analytic.rows(); ++i)
                         for (Eigen::Index j = i + 1; j < analytic.cols(); ++j) {
                           const double diff = std::abs(mc.estimate(i, j) - analytic(i, j));
                           const double z = diff / mc.std_error(i, j);
                           const bool ok = diff <= 3.0 * mc.std_error(i, j);
                           failures += !ok;
                           max_z = std::max(max_z, z);
                           pairs.push_back(Json{{"i", i}, {"j", j}, {"analytic", analytic(i, j)},
                                                {"estimate", mc.estimate(i, j)}, {"stderr", mc.std_error(i, j)},
                                                {"within_3se", ok}});
                         }
                       run.emit(Json{{"d", vo.d},
                                     {"v0", vo.v0},
                                     {"canonical", !vo.full},
                                     {"directions", dirs.size()},
                                     {"samples", vo.samples},
                                     {"seed", vo.seed},
                                     {"pair_count", pairs.size()},
                                     {"failures", failures},
                                     {"max_abs_z", max_z},
                                     {"pass", failures == 0},
                                     {"pairs", std::move(pairs)}});
                       return failures == 0 ? kExitOk : kExitVerificationFailed;
                     });
    sub->add_option("--d", vo.d, "Dimension")->capture_default_str();
    sub->add_option("--v0", vo.v0, "l1 radius")->capture_default_str();
    sub->add_option("--samples", vo.samples, "Monte-Carlo samples")->capture_default_str();
    sub->add_option("--seed", vo.seed, "Seed")->capture_default_str();
    sub->add_flag("--full", vo.full, "Use all nonzero lattice points (adds theta/-theta pairs)");
  }
  struct {
    int d = 5, ell_max = 4;
    std::size_t pairs = 10, samples = 1'000'000;
    std::uint64_t seed = 1;
  } vh;
  {
    auto* sub = leaf(*verify, reg, "hermite-gram", "Monte-Carlo check of E[phi_l(a.X) phi_l(b.X)] = (a.b)^l",
                     "verify hermite-gram", [&](Run& run) {
                       require(vh.d >= 1 && vh.ell_max >= 1 && vh.pairs >= 1, "hermite-gram: need d, ell-max, pairs >= 1");
                       run.manifest.seed = vh.seed;
                       const CounterRng rng(vh.seed, /*domain=*/0x4844u);
                       Eigen::MatrixXd theta(vh.d, static_cast<Eigen::Index>(2 * vh.pairs));
                       for (Eigen::Index k = 0; k < theta.cols(); ++k) {
                         for (Eigen::Index j = 0; j < vh.d; ++j)
                           theta(j, k) = rng.normal(static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(j));
                         theta.col(k).normalize();
                       }
                       Json rows = Json::array();
                       std::size_t failures = 0;
                       for (int ell = 1; ell <= vh.ell_max; ++ell) {
                         const auto mc = mc_gram(Activation::hermite(ell), Design::gaussian, theta, vh.samples, vh.seed,
                                                 run.threads());
                         for (std::size_t p = 0; p < vh.pairs; ++p) {
                           const auto a = static_cast<Eigen::Index>(2 * p), b = a + 1;
                           const double exact = std::pow(theta.col(a).dot(theta.col(b)), ell);
                           const bool ok = std::abs(mc.estimate(a, b) - exact) <= 3.0 * mc.std_error(a, b);
                           failures += !ok;
                           rows.push_back(Json{{"ell", ell}, {"pair", p}, {"dot", theta.col(a).dot(theta.col(b))},
                                               {"exact", exact}, {"estimate", mc.estimate(a, b)},
                                               {"stderr", mc.std_error(a, b)}, {"within_3se", ok}});
                         }
                       }
                       run.emit(Json{{"d", vh.d},
                                     {"ell_max", vh.ell_max},
                                     {"samples", vh.samples},
                                     {"seed", vh.seed},
                                     {"failures", failures},
                                     {"pass", failures == 0},
                                     {"checks", std::move(rows)}});
                       return failures == 0 ? kExitOk : kExitVerificationFailed;
                     });
    sub->add_option("--d", vh.d, "Dimension")->capture_default_str();
    sub->add_option("--ell-max", vh.ell_max, "Largest order")->capture_default_str();
    sub->add_option("--pairs", vh.pairs, "Random direction pairs")->capture_default_str();
    sub->add_option("--samples", vh.samples, "Monte-Carlo samples")->capture_default_str();
    sub->add_option("--seed", vh.seed, "Seed")->capture_default_str();
  }

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo experiments");
  simulate->require_subcommand(1);
  struct {
    std::string packing;
    std::int64_t n = 0;
    double n_fraction = 0.1, sigma = 1.0;
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
  } sf;
  {
    auto* sub = leaf(*simulate, reg, "fano", "Identification error of least squares vs the Fano bound",
                     "simulate fano", [&](Run& run) {
                       run.manifest.seed = sf.seed;
                       const std::string text = read_file(sf.packing);
                       run.add_input(sf.packing, text);
                       const auto ps = packing_from_json(Json::parse(text));
                       const auto n = sf.n > 0 ? sf.n : tuned_sample_size(ps, sf.n_fraction, sf.sigma);
                       auto report = fano_experiment(ps, n, sf.trials, sf.seed, run.threads(), sf.sigma);
                       report.packing_id = sha256_hex(text);
                       run.emit(to_json(report));
                       return report.pass ? kExitOk : kExitVerificationFailed;
                     });
    sub->add_option("--packing", sf.packing, "Packing JSON")->required()->check(CLI::ExistingFile);
    sub->add_option("--n", sf.n, "Sample size (0 = tuned by --n-fraction)")->capture_default_str();
    sub->add_option("--n-fraction", sf.n_fraction, "Tune n so that n ||f||^2 / (2 sigma^2) = fraction * log #F0")
        ->capture_default_str();
    sub->add_option("--trials", sf.trials, "Trials")->capture_default_str();
    sub->add_option("--seed", sf.seed, "Seed")->capture_default_str();
    sub->add_option("--sigma", sf.sigma, "Noise standard deviation")->capture_default_str();
  }

  // map-class
  struct {
    double v0 = 1.0, v1 = 1.0, d = 0.0, n = 0.0;
    std::vector<std::string> constants;
  } mc;
  {
    auto* sub = leaf(app, reg, "map-class", "Sigmoid classes containing a sine class", "map-class", [&](Run& run) {
      ClassDescriptor src;
      src.activation = ActivationKind::sine;
      src.v0 = mc.v0;
      src.v1 = mc.v1;
      const auto constants = parse_constants(mc.constants);
      Json maps = Json::array();
      for (const auto& m : map_class(src)) {
        Json j = to_json(m);
        if (mc.d > 0 && mc.n > 0) j["lower_bound_rate"] = transferred_lower_bound(m, mc.d, mc.n, constants);
        maps.push_back(std::move(j));
      }
      run.emit(Json{{"source", Json{{"activation", "sine"}, {"v0", mc.v0}, {"v1", mc.v1}}}, {"mappings", std::move(maps)}});
      return kExitOk;
    });
    sub->add_option("--v0", mc.v0, "Inner bound of the sine class")->capture_default_str();
    sub->add_option("--v1", mc.v1, "Outer bound of the sine class")->capture_default_str();
    sub->add_option("--d", mc.d, "Dimension for the transferred lower bound (0 = omit)")->capture_default_str();
    sub->add_option("--n", mc.n, "Sample size for the transferred lower bound (0 = omit)")->capture_default_str();
    sub->add_option("--const", mc.constants, "Override a constant, name=value");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (!reg.handler) {
    std::cerr << app.help();
    return kExitUsage;
  }

  Run run;
  run.common = reg.common;
  run.manifest.tool_version = RIDGEBOUND_VERSION;
  run.manifest.command = reg.command;
  run.manifest.command_line.push_back("ridgebound");
  run.manifest.command_line.insert(run.manifest.command_line.end(), args.begin(), args.end());
  run.manifest.parameters = collect_parameters(reg.leaf);
  try {
    return reg.handler(run);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
}

int dispatch(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return dispatch(args);
}

}  // namespace ridgebound::cli
