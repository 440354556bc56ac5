#include "ridgebound/variation.hpp"

#include <cmath>
#include <numbers>

#include "ridgebound/error.hpp"
#include "ridgebound/parallel.hpp"

namespace ridgebound {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

void check_domain(double z, double v, const char* what) {
  require(v > 0.0, std::string(what) + ": need v > 0");
  require(std::abs(z) <= v * (1.0 + 1e-15), std::string(what) + ": need |z| <= v");
}

double split_integral(const Integrand& f, double z, double v, const QuadratureConfig& cfg) {
  const double kink = std::min(1.0, std::abs(z) / v);
  return integrate_piecewise(f, 0.0, 1.0, {kink}, cfg).value;
}

}  // namespace

double sin_sgn_rhs(double z, double v, const QuadratureConfig& cfg) {
  check_domain(z, v, "sin_sgn_rhs");
  const auto f = [z, v](double t) { return std::cos(v * t) * (sgn(z / v - t) - sgn(-z / v - t)); };
  return 0.5 * v * split_integral(f, z, v, cfg);
}

double cos_sgn_rhs(double w, double v, const QuadratureConfig& cfg) {
  check_domain(w, v, "cos_sgn_rhs");
  const auto f = [w, v](double t) { return std::sin(v * t) * (sgn(-w / v - t) + sgn(w / v - t)); };
  return std::cos(v) - 0.5 * v * split_integral(f, w, v, cfg);
}

double sin_clip_rhs(double z, double v, const QuadratureConfig& cfg) {
  check_domain(z, v, "sin_clip_rhs");
  // clip kinks in t: +-z/v and +-z/v - 1; only |z|/v can fall inside (0, 1).
  const auto f = [z, v](double t) {
    return std::sin(v * t) * (clip(-2.0 * z / v - 2.0 * t - 1.0) - clip(2.0 * z / v - 2.0 * t - 1.0));
  };
  return z + 0.5 * v * v * split_integral(f, z, v, cfg);
}

double verify_sin_sgn_identity(double z, double v, const QuadratureConfig& cfg) {
  return std::abs(std::sin(z) - sin_sgn_rhs(z, v, cfg));
}

double verify_cos_sgn_identity(double w, double v, const QuadratureConfig& cfg) {
  return std::abs(std::cos(w) - cos_sgn_rhs(w, v, cfg));
}

double verify_sin_clip_identity(double z, double v, const QuadratureConfig& cfg) {
  return std::abs(std::sin(z) - sin_clip_rhs(z, v, cfg));
}

std::string to_string(Identity id) {
  switch (id) {
    case Identity::sin_sgn: return "sin_sgn";
    case Identity::cos_sgn: return "cos_sgn";
    case Identity::sin_clip: return "sin_clip";
  }
  return "";
}

IdentityGridReport verify_identity_grid(Identity id, double v, int grid_size, const QuadratureConfig& cfg,
                                        unsigned threads) {
  require(grid_size >= 2, "verify_identity_grid: need at least two grid points");
  require(v > 0.0, "verify_identity_grid: need v > 0");
  IdentityGridReport report;
  report.identity = id;
  report.v = v;
  report.points.resize(static_cast<std::size_t>(grid_size));
  parallel_for(report.points.size(), threads, [&](std::size_t i) {
    double z = -v + 2.0 * v * static_cast<double>(i) / static_cast<double>(grid_size - 1);
    if (i + 1 == report.points.size()) z = v;
    double r = 0.0;
    switch (id) {
      case Identity::sin_sgn: r = verify_sin_sgn_identity(z, v, cfg); break;
      case Identity::cos_sgn: r = verify_cos_sgn_identity(z, v, cfg); break;
      case Identity::sin_clip: r = verify_sin_clip_identity(z, v, cfg); break;
    }
    report.points[i] = {z, r};
  });
  for (const auto& p : report.points) report.max_residual = std::max(report.max_residual, p.residual);
  return report;
}

std::string to_string(VConvention c) { return c == VConvention::pi_v0 ? "v=pi*v0" : "v=v0"; }

std::map<std::string, VariationConstant> variation_constants(int v0, const QuadratureConfig& cfg) {
  require(v0 >= 1, "variation_constants: need v0 >= 1");
  std::map<std::string, VariationConstant> out;
  const double dv0 = v0;
  out["sgn"].paper_value = kSqrt2 * kPi * dv0;
  out["step"].paper_value = 2.0 * kSqrt2 * kPi * dv0;
  out["clip"].paper_value = kSqrt2 * kPi * (dv0 * dv0 + 1.0);

  for (const auto conv : {VConvention::pi_v0, VConvention::v0}) {
    const double v = conv == VConvention::pi_v0 ? kPi * dv0 : dv0;
    // |cos(vt)| and |sin(vt)| kink at multiples of pi/(2v)
    std::vector<double> kinks;
    for (double t = kPi / (2.0 * v); t < 1.0; t += kPi / (2.0 * v)) kinks.push_back(t);
    const double abs_cos =
        integrate_piecewise([v](double t) { return std::abs(std::cos(v * t)); }, 0.0, 1.0, kinks, cfg).value;
    const double abs_sin =
        integrate_piecewise([v](double t) { return std::abs(std::sin(v * t)); }, 0.0, 1.0, kinks, cfg).value;
    const std::string key = to_string(conv);
    out["sgn"].quadrature_value[key] = kSqrt2 * v * abs_cos;
    out["step"].quadrature_value[key] = 2.0 * kSqrt2 * v * abs_cos;
    out["clip"].quadrature_value[key] = kSqrt2 * (v + v * v * abs_sin);
  }
  return out;
}

std::vector<ClassMapping> map_class(const ClassDescriptor& src) {
  require(src.activation == ActivationKind::sine, "map_class: source must be a sine class");
  src.validate();
  const double base = kSqrt2 * kPi * src.v1;
  return {
      ClassMapping{src, ActivationKind::sgn, 1.0, base * src.v0},
      ClassMapping{src, ActivationKind::clip, 2.0, base * (src.v0 * src.v0 + 1.0)},
  };
}

double transferred_lower_bound(const ClassMapping& m, double d, double n, const RateConstants& constants) {
  const auto regime = sine_regime(d, m.source.v0);
  const double c = constants.get(regime == Regime::high_d ? "c6" : "c7");
  return rate_sine(d, m.source.v0, m.source.v1, n, regime, c);
}

}  // namespace ridgebound
