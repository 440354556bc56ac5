#pragma once

#include <map>
#include <string>
#include <vector>

#include "ridgebound/quadrature.hpp"
#include "ridgebound/rates.hpp"
#include "ridgebound/ridge.hpp"

namespace ridgebound {

// Right-hand sides of the integral representations, |z| <= v.
//   sin z = (v/2) int_0^1 cos(vt) [sgn(z/v - t) - sgn(-z/v - t)] dt
//   cos w = cos v - (v/2) int_0^1 sin(vt) [sgn(-w/v - t) + sgn(w/v - t)] dt
//   sin z = z + (v^2/2) int_0^1 sin(vt) [clip(-2z/v - 2t - 1) - clip(2z/v - 2t - 1)] dt
// Integrands are split at t = |z|/v before adaptive Simpson.
double sin_sgn_rhs(double z, double v, const QuadratureConfig& cfg = {});
double cos_sgn_rhs(double w, double v, const QuadratureConfig& cfg = {});
double sin_clip_rhs(double z, double v, const QuadratureConfig& cfg = {});

double verify_sin_sgn_identity(double z, double v, const QuadratureConfig& cfg = {});
double verify_cos_sgn_identity(double w, double v, const QuadratureConfig& cfg = {});
double verify_sin_clip_identity(double z, double v, const QuadratureConfig& cfg = {});

enum class Identity { sin_sgn, cos_sgn, sin_clip };
std::string to_string(Identity id);

struct IdentityPoint {
  double z = 0.0;
  double residual = 0.0;
};

struct IdentityGridReport {
  Identity identity = Identity::sin_sgn;
  double v = 0.0;
  std::vector<IdentityPoint> points;  // grid_size points evenly spaced on [-v, v]
  double max_residual = 0.0;
};

IdentityGridReport verify_identity_grid(Identity id, double v, int grid_size, const QuadratureConfig& cfg = {},
                                        unsigned threads = 1);

// Which v the identities use for a sine class with inner bound v0: the class
// argument pi theta.x spans [-pi v0, pi v0] (pi_v0), or literally v = v0 (v0).
enum class VConvention { pi_v0, v0 };
std::string to_string(VConvention c);

struct VariationConstant {
  double paper_value = 0.0;
  std::map<std::string, double> quadrature_value;  // keyed by convention name
};

// step, sgn and clip variation of sqrt(2) sin(pi z) on [-v0, v0]. Quadrature values are
// sqrt(2) times the l1 coefficient mass of each representation:
//   sgn: v int|cos(vt)|, step: twice sgn, clip: v + v^2 int|sin(vt)| (linear part included).
std::map<std::string, VariationConstant> variation_constants(int v0, const QuadratureConfig& cfg = {});

struct ClassMapping {
  ClassDescriptor source;
  ActivationKind target = ActivationKind::sgn;
  double target_v0 = 0.0;
  double target_v1 = 0.0;
};

// Sine class F_{v0,v1} is contained in F_{1, sqrt2 pi v0 v1, sgn} and F_{2, sqrt2 pi (v0^2+1) v1, clip}.
std::vector<ClassMapping> map_class(const ClassDescriptor& src);

// Lower-bound rate carried by a target class: that of its sine source.
double transferred_lower_bound(const ClassMapping& m, double d, double n, const RateConstants& constants = {});

}  // namespace ridgebound
