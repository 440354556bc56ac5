#include "ridgebound/lattice.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "ridgebound/error.hpp"

namespace ridgebound {

std::string to_string(DirectionKind kind) { return kind == DirectionKind::lattice ? "lattice" : "unit-code"; }

DirectionKind direction_kind_from_string(const std::string& name) {
  if (name == "lattice") return DirectionKind::lattice;
  if (name == "unit-code") return DirectionKind::unit_code;
  throw PreconditionError("unknown direction kind '" + name + "'");
}

RidgeDirection RidgeDirection::from_coordinates(std::vector<Rational> coords, DirectionKind kind) {
  RidgeDirection r;
  r.coordinates = std::move(coords);
  r.kind = kind;
  for (const auto& c : r.coordinates) {
    r.l1_norm += abs(c);
    r.l2_norm_sq += c * c;
  }
  r.l2_norm = r.l2_norm_sq == Rational(1) ? 1.0 : std::sqrt(r.l2_norm_sq.to_double());
  return r;
}

Eigen::VectorXd RidgeDirection::to_vector() const {
  Eigen::VectorXd v(static_cast<Eigen::Index>(dim()));
  for (std::size_t i = 0; i < dim(); ++i) v[static_cast<Eigen::Index>(i)] = coordinates[i].to_double();
  return v;
}

Rational dot(const RidgeDirection& a, const RidgeDirection& b) {
  require(a.dim() == b.dim(), "dot: dimension mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!a.coordinates[i].is_zero() && !b.coordinates[i].is_zero()) s += a.coordinates[i] * b.coordinates[i];
  return s;
}

RidgeDirection negate(const RidgeDirection& a) {
  RidgeDirection r = a;
  for (auto& c : r.coordinates) c = -c;
  return r;
}

std::uint64_t l1_lattice_count(int d, int v0) {
  require(d >= 0 && v0 >= 0, "l1_lattice_count: need d, v0 >= 0");
  // row[r] = N(k, r) for the current k
  std::vector<unsigned __int128> row(static_cast<std::size_t>(v0) + 1, 1);
  for (int k = 1; k <= d; ++k) {
    std::vector<unsigned __int128> next(row.size());
    for (int r = 0; r <= v0; ++r) {
      unsigned __int128 n = row[r];
      for (int j = 1; j <= r; ++j) n += 2 * row[r - j];
      if (n > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("l1_lattice_count: overflow");
      next[r] = n;
    }
    row = std::move(next);
  }
  return static_cast<std::uint64_t>(row[v0]);
}

std::vector<RidgeDirection> enumerate_l1_lattice(int d, int v0, bool canonical, std::uint64_t coordinate_cap) {
  require(d >= 1, "enumerate_l1_lattice: need d >= 1");
  require(v0 >= 0, "enumerate_l1_lattice: need v0 >= 0");
  const std::uint64_t full = l1_lattice_count(d, v0);
  if (static_cast<long double>(full) * d > static_cast<long double>(coordinate_cap))
    throw CapExceededError("enumerate_l1_lattice: d * count = " + std::to_string(d) + " * " + std::to_string(full) +
                           " exceeds cap " + std::to_string(coordinate_cap));

  std::vector<RidgeDirection> out;
  out.reserve(canonical ? (full - 1) / 2 : full);
  std::vector<Rational> coords(static_cast<std::size_t>(d));
  // first_sign: sign of the first nonzero coordinate chosen so far (0 = none yet)
  std::function<void(int, int, int)> fill = [&](int i, int budget, int first_sign) {
    if (i == d) {
      if (canonical && first_sign <= 0) return;  // drops zero and the negative half
      out.push_back(RidgeDirection::from_coordinates(coords, DirectionKind::lattice));
      return;
    }
    for (int v = -budget; v <= budget; ++v) {
      if (canonical && first_sign == 0 && v < 0) continue;
      coords[static_cast<std::size_t>(i)] = Rational(v);
      fill(i + 1, budget - std::abs(v), first_sign != 0 ? first_sign : (v > 0) - (v < 0));
    }
  };
  fill(0, v0, 0);
  return out;
}

double LatticeCountBounds::lower_large_d() const { return std::exp(log_lower_large_d); }
double LatticeCountBounds::lower_large_v0() const { return std::exp(log_lower_large_v0); }
double LatticeCountBounds::binomial_count() const {
  // a binomial coefficient: snap to the integer while exp() is accurate to well under 1/2
  const double x = std::exp(log_binomial_count);
  return x < 0x1.0p40 ? std::round(x) : x;
}

LatticeCountBounds lattice_count_bounds(int d, int v0) {
  require(d >= 1 && v0 >= 1, "lattice_count_bounds: need d, v0 >= 1");
  const double dd = d, vv = v0;
  return {vv * std::log1p(dd / vv), dd * std::log1p(vv / dd), log_binomial(2 * d + v0, 2 * d)};
}

std::vector<RidgeDirection> hermite_directions(const Codebook& cb, int v0, int d) {
  std::vector<std::string> violations;
  const auto v0sq = static_cast<std::size_t>(v0) * static_cast<std::size_t>(v0);
  if (v0 < 1) violations.push_back("v0 >= 1");
  if (d < 10) violations.push_back("d >= 10");
  if (cb.length != static_cast<std::size_t>(d)) violations.push_back("codebook length == d");
  if (cb.weight != v0sq) violations.push_back("codebook weight == v0^2");
  if (10 * v0sq > static_cast<std::size_t>(d)) violations.push_back("v0^2 <= d/10");
  const auto report = verify_codebook(cb);
  if (!report.find("weight")->passed) violations.push_back("every word has weight v0^2");
  const std::size_t need = (v0sq + 4) / 5;
  if (report.actual_min_distance != CodebookReport::kInfiniteDistance && report.actual_min_distance < need)
    violations.push_back("pairwise Hamming distance >= ceil(v0^2/5) = " + std::to_string(need) + " (actual " +
                         std::to_string(report.actual_min_distance) + ")");
  if (!violations.empty()) {
    std::string msg = "hermite_directions: precondition violated:";
    for (const auto& v : violations) msg += " [" + v + "]";
    throw PreconditionError(msg);
  }

  std::vector<RidgeDirection> out;
  out.reserve(cb.size());
  const Rational entry(1, v0);
  for (const auto& a : cb.words) {
    std::vector<Rational> coords(static_cast<std::size_t>(d));
    for (auto i : a.support()) coords[i] = entry;
    out.push_back(RidgeDirection::from_coordinates(std::move(coords), DirectionKind::unit_code));
  }
  return out;
}

int floor_v0(double v0, std::vector<std::string>* warnings) {
  require(std::isfinite(v0) && v0 >= 1.0, "v0 must be finite and >= 1");
  const double f = std::floor(v0);
  if (f != v0 && warnings) warnings->push_back("v0=" + std::to_string(v0) + " floored to " + std::to_string(static_cast<int>(f)));
  return static_cast<int>(f);
}

}  // namespace ridgebound
