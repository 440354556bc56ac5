#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include <Eigen/Core>

#include "ridgebound/lattice.hpp"
#include "ridgebound/quadrature.hpp"

namespace ridgebound {

enum class ActivationKind { sine, sgn, step, clip, hermite, clipped_hermite };

std::string to_string(ActivationKind kind);
ActivationKind activation_from_string(const std::string& name);

// Probabilists' Hermite polynomial He_l(z) by He_{k+1} = z He_k - k He_{k-1}.
template <typename Scalar>
Scalar hermite_he(int ell, Scalar z) {
  if (ell == 0) return Scalar(1);
  Scalar prev(1), cur = z;
  for (int k = 1; k < ell; ++k) {
    const Scalar next = z * cur - Scalar(k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// Standardized Hermite polynomial He_l / sqrt(l!), orthonormal under N(0, 1).
// Up to l = 20 the factorial is exact in double; beyond that the recurrence is
// run on the normalized sequence, phi_{k+1} = (z phi_k - sqrt(k) phi_{k-1}) / sqrt(k+1),
// so l! is never formed.
template <typename Scalar>
Scalar hermite_standardized(int ell, Scalar z) {
  using std::sqrt;
  if (ell <= 20) {
    double factorial = 1.0;
    for (int k = 2; k <= ell; ++k) factorial *= k;
    return hermite_he(ell, z) / Scalar(std::sqrt(factorial));
  }
  Scalar prev(1), cur = z;
  for (int k = 1; k < ell; ++k) {
    const Scalar next = (z * cur - Scalar(std::sqrt(double(k))) * prev) / Scalar(std::sqrt(double(k + 1)));
    prev = cur;
    cur = next;
  }
  return cur;
}

// step(z) = 1{z > 0}, so step(0) = 0 and sgn(0) = -1.
template <typename Scalar>
Scalar step(Scalar z) {
  return z > Scalar(0) ? Scalar(1) : Scalar(0);
}
template <typename Scalar>
Scalar sgn(Scalar z) {
  return Scalar(2) * step(z) - Scalar(1);
}
template <typename Scalar>
Scalar clip(Scalar z) {
  using std::abs;
  using std::min;
  return z == Scalar(0) ? Scalar(0) : sgn(z) * min(Scalar(1), abs(z));
}
template <typename Scalar>
Scalar sine_activation(Scalar z) {
  using std::sin;
  return Scalar(std::numbers::sqrt2) * sin(Scalar(std::numbers::pi) * z);
}

struct Activation {
  ActivationKind kind = ActivationKind::sine;
  int order = 0;                                           // hermite order l
  double clip_at = std::numeric_limits<double>::infinity();  // zeta for clipped-hermite

  static Activation sine() { return {ActivationKind::sine}; }
  static Activation sgn() { return {ActivationKind::sgn}; }
  static Activation step() { return {ActivationKind::step}; }
  static Activation clip() { return {ActivationKind::clip}; }
  static Activation hermite(int ell) { return {ActivationKind::hermite, ell}; }
  static Activation clipped_hermite(int ell, double zeta) { return {ActivationKind::clipped_hermite, ell, zeta}; }
};

template <typename Scalar>
Scalar eval_activation(const Activation& act, Scalar z) {
  switch (act.kind) {
    case ActivationKind::sine: return sine_activation(z);
    case ActivationKind::sgn: return sgn(z);
    case ActivationKind::step: return step(z);
    case ActivationKind::clip: return clip(z);
    case ActivationKind::hermite: return hermite_standardized(act.order, z);
    case ActivationKind::clipped_hermite: {
      const Scalar zeta(act.clip_at);
      const Scalar held = z > zeta ? zeta : (z < -zeta ? -zeta : z);
      return hermite_standardized(act.order, held);
    }
  }
  return Scalar(0);
}

// outer_scale * phi(theta . x - shift)
struct RidgeFunction {
  Activation activation;
  RidgeDirection direction;
  double shift = 0.0;
  double outer_scale = 1.0;

  RidgeFunction(Activation act, RidgeDirection dir, double t = 0.0, double scale = 1.0)
      : activation(act), direction(std::move(dir)), shift(t), outer_scale(scale), theta_(direction.to_vector()) {}

  const Eigen::VectorXd& theta() const { return theta_; }

 private:
  Eigen::VectorXd theta_;
};

double eval_ridge(const RidgeFunction& f, const Eigen::Ref<const Eigen::VectorXd>& x);

// Function class F_{v0, v1, phi}.
struct ClassDescriptor {
  ActivationKind activation = ActivationKind::sine;
  double v0 = 1.0;
  double v1 = 1.0;
  int ell = 0;

  void validate() const;
};

// E[phi_l(Z)^2 1{|Z| > zeta}], Z ~ N(0, 1), by adaptive quadrature.
double hermite_tail_mass(int ell, double zeta, const QuadratureConfig& cfg);

struct ClipThreshold {
  double zeta = 0.0;
  double tail_mass = 1.0;  // quadrature value at zeta
  bool boundary = false;   // delta >= 1: the whole real line is admissible
  int iterations = 0;
};

// Smallest zeta (bisection resolution 1e-12) with hermite_tail_mass(ell, zeta) <= delta.
// Quadrature tolerance defaults to delta / 100.
ClipThreshold hermite_clip_threshold(int ell, double delta, std::optional<QuadratureConfig> cfg = std::nullopt,
                                     int max_iterations = 200);

}  // namespace ridgebound

namespace ridgebound {

// Packing/rate family: sinusoidal nets on the uniform cube or Hermite
// polynomial nets under Gaussian design.
enum class Family { sine, hermite };

inline std::string to_string(Family f) { return f == Family::sine ? "sine" : "hermite"; }
Family family_from_string(const std::string& name);

}  // namespace ridgebound
