#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "ridgebound/codes.hpp"
#include "ridgebound/rational.hpp"

namespace ridgebound {

enum class DirectionKind { lattice, unit_code };

std::string to_string(DirectionKind kind);
DirectionKind direction_kind_from_string(const std::string& name);

// Inner parameter vector with exact norms.
struct RidgeDirection {
  std::vector<Rational> coordinates;
  Rational l1_norm;
  Rational l2_norm_sq;
  double l2_norm = 0.0;
  DirectionKind kind = DirectionKind::lattice;

  static RidgeDirection from_coordinates(std::vector<Rational> coords, DirectionKind kind);

  std::size_t dim() const { return coordinates.size(); }
  bool is_zero() const { return l1_norm.is_zero(); }
  Eigen::VectorXd to_vector() const;

  friend bool operator==(const RidgeDirection& a, const RidgeDirection& b) {
    return a.coordinates == b.coordinates;
  }
};

Rational dot(const RidgeDirection& a, const RidgeDirection& b);
RidgeDirection negate(const RidgeDirection& a);

// #{theta in Z^d : |theta|_1 <= v0} by the recurrence
// N(d, v0) = N(d-1, v0) + 2 * sum_{j=1..v0} N(d-1, v0-j), N(0, .) = 1.
std::uint64_t l1_lattice_count(int d, int v0);

// Integer points of the l1 ball of radius v0. In canonical mode the zero vector
// is dropped and only the member of each +-pair whose first nonzero coordinate
// is positive is kept. `coordinate_cap` bounds d * count.
std::vector<RidgeDirection> enumerate_l1_lattice(int d, int v0, bool canonical = true,
                                                 std::uint64_t coordinate_cap = 100'000'000);

struct LatticeCountBounds {
  double log_lower_large_d;   // v0 * log(1 + d/v0)
  double log_lower_large_v0;  // d * log(1 + v0/d)
  double log_binomial_count;     // log C(2d + v0, 2d)
  double lower_large_d() const;
  double lower_large_v0() const;
  double binomial_count() const;
};

LatticeCountBounds lattice_count_bounds(int d, int v0);

// theta = a / v0 for each codeword a of length d and weight v0^2.
std::vector<RidgeDirection> hermite_directions(const Codebook& cb, int v0, int d);

// Non-integer v0 is floored; a warning is appended when that happens.
int floor_v0(double v0, std::vector<std::string>* warnings = nullptr);

}  // namespace ridgebound
