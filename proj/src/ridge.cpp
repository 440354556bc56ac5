#include "ridgebound/ridge.hpp"

#include "ridgebound/error.hpp"

namespace ridgebound {

std::string to_string(ActivationKind kind) {
  switch (kind) {
    case ActivationKind::sine: return "sine";
    case ActivationKind::sgn: return "sgn";
    case ActivationKind::step: return "step";
    case ActivationKind::clip: return "clip";
    case ActivationKind::hermite: return "hermite";
    case ActivationKind::clipped_hermite: return "clipped-hermite";
  }
  return "unknown";
}

ActivationKind activation_from_string(const std::string& name) {
  for (auto k : {ActivationKind::sine, ActivationKind::sgn, ActivationKind::step, ActivationKind::clip,
                 ActivationKind::hermite, ActivationKind::clipped_hermite})
    if (to_string(k) == name) return k;
  throw PreconditionError("unknown activation '" + name + "' (sine|sgn|step|clip|hermite|clipped-hermite)");
}

double eval_ridge(const RidgeFunction& f, const Eigen::Ref<const Eigen::VectorXd>& x) {
  require(x.size() == f.theta().size(), "eval_ridge: dimension mismatch");
  if (f.outer_scale == 0.0) return 0.0;
  return f.outer_scale * eval_activation(f.activation, f.theta().dot(x) - f.shift);
}

Family family_from_string(const std::string& name) {
  if (name == "sine") return Family::sine;
  if (name == "hermite") return Family::hermite;
  throw PreconditionError("unknown family '" + name + "' (sine|hermite)");
}

void ClassDescriptor::validate() const {
  require(v0 > 0.0, "class descriptor: need v0 > 0");
  require(v1 > 0.0, "class descriptor: need v1 > 0");
  require(ell >= 0, "class descriptor: need hermite order >= 0");
}

namespace {

double standard_normal_pdf(double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi); }

double tail_upper_limit(int ell, double zeta) { return std::max(zeta, std::sqrt(4.0 * ell + 2.0)) + 15.0; }

}  // namespace

double hermite_tail_mass(int ell, double zeta, const QuadratureConfig& cfg) {
  require(ell >= 0, "hermite_tail_mass: need l >= 0");
  require(zeta >= 0.0, "hermite_tail_mass: need zeta >= 0");
  const auto integrand = [ell](double z) {
    const double h = hermite_standardized(ell, z);
    return h * h * standard_normal_pdf(z);
  };
  QuadratureConfig half = cfg;
  half.abs_tol = 0.5 * cfg.abs_tol;
  return 2.0 * adaptive_simpson(integrand, zeta, tail_upper_limit(ell, zeta), half).value;
}

ClipThreshold hermite_clip_threshold(int ell, double delta, std::optional<QuadratureConfig> cfg, int max_iterations) {
  require(ell >= 0, "hermite_clip_threshold: need l >= 0");
  require(delta > 0.0 && delta <= 1.0, "hermite_clip_threshold: need 0 < delta <= 1");
  if (delta >= 1.0) return {0.0, 1.0, true, 0};
  QuadratureConfig qc = cfg.value_or(QuadratureConfig{delta / 100.0, 50});

  double lo = 0.0, hi = tail_upper_limit(ell, 0.0);
  double hi_mass = hermite_tail_mass(ell, hi, qc);
  int it = 0;
  for (; it < max_iterations && hi - lo > 1e-12 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    const double mass = hermite_tail_mass(ell, mid, qc);
    if (mass <= delta) {
      hi = mid;
      hi_mass = mass;
    } else {
      lo = mid;
    }
  }
  if (hi - lo > 1e-12 * std::max(1.0, hi))
    throw ConvergenceError("hermite_clip_threshold: bisection did not converge in " + std::to_string(max_iterations) +
                           " iterations");
  return {hi, hi_mass, false, it};
}

}  // namespace ridgebound
