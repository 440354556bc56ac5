#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ridgebound/ridge.hpp"

namespace ridgebound {

// Universal constants c1..c10, the upper-bound constant of the high-dimensional
// comparison curve (c4_upper), the multiple in the sufficient order condition
// (c_ell) and the exponent gamma. All default to 1 except gamma = 1/3.
class RateConstants {
 public:
  RateConstants();
  double get(const std::string& name) const;
  void set(const std::string& name, double value);
  const std::map<std::string, double>& values() const { return values_; }

 private:
  std::map<std::string, double> values_;
};

enum class Regime { high_d, low_d, hermite };  // d > v0, v0 > d, Hermite nets

std::string to_string(Regime r);

// d >= v0 selects the d > v0 formula (the two coincide at d = v0).
inline Regime sine_regime(double d, double v0) { return d >= v0 ? Regime::high_d : Regime::low_d; }

// (v0 v1^2 log(1 + d/v0) / n)^{1/2} for d > v0, (d v1^2 log(1 + v0/d) / n)^{1/2} for v0 > d.
template <typename Scalar>
Scalar rate_sine(Scalar d, Scalar v0, Scalar v1, Scalar n, Regime regime, Scalar constant = Scalar(1)) {
  using std::log1p;
  using std::sqrt;
  const Scalar inner = regime == Regime::low_d ? d * v1 * v1 * log1p(v0 / d) : v0 * v1 * v1 * log1p(d / v0);
  return constant * sqrt(inner / n);
}

// (v0^2 v1^2 log(d / v0^2) / n)^{1/2}; requires d > v0^2.
double rate_hermite(double d, double v0, double v1, double n, double constant = 1.0);

struct RateQuery {
  Family family = Family::sine;
  double d = 1.0, v0 = 1.0, v1 = 1.0, n = 1.0;
  std::optional<int> ell;
  RateConstants constants;

  void validate() const;
  Regime regime() const { return family == Family::hermite ? Regime::hermite : sine_regime(d, v0); }
};

struct ConditionOutcome {
  bool holds = false;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string formula;
};

// Literal evaluation of the technical conditions for the query's family:
// sine -> growth_high_d, growth_low_d and the two epsilon floors at eps_n; hermite -> hermite_dimension,
// hermite_order and the sufficient order condition (hermite_order needs ell).
std::map<std::string, ConditionOutcome> check_conditions(const RateQuery& q);

ConditionOutcome growth_condition_high_d(double d, double v0, double v1, double n, double c4);
ConditionOutcome growth_condition_low_d(double d, double v0, double v1, double n, double c5);
ConditionOutcome hermite_dimension_condition(double d, double v0, double v1, double n, double c8);
ConditionOutcome hermite_order_condition(int ell, double d, double v0, double v1, double n, double c9);

struct MatchingOptions {
  double rel_tol = 1e-10;
  int max_iterations = 10'000;
};

// eps_n^2 solving eps^2 = logN(eps) / n by bisection in log(eps); logN must be
// nonincreasing and positive.
double solve_matching(const std::function<double(double)>& log_packing, double n, const MatchingOptions& opt = {});

// log N(eps) lower bounds whose matching gives the closed-form rates.
std::function<double(double)> log_packing_sine(double d, double v0, double v1, Regime regime);
std::function<double(double)> log_packing_hermite(double d, double v0, double v1);

inline double upper_low_dim_exponent(double d) { return 0.5 + 1.0 / (2.0 * (d + 1.0)); }
inline double lower_unconstrained_exponent(double d) { return 0.5 + 1.0 / (d + 2.0); }

// Reference upper/lower curves from the literature plus this family's lower bounds.
std::map<std::string, double> comparison_curves(const RateQuery& q);

struct RateResult {
  Family family = Family::sine;
  Regime regime = Regime::high_d;
  double eps_n_sq = 0.0;          // closed form times the regime constant
  double eps_n_sq_matched = 0.0;  // bisection on the matching equation
  std::string formula;
  std::map<std::string, ConditionOutcome> conditions;
  std::map<std::string, double> comparison;
  RateConstants constants;
};

RateResult compute_rate(const RateQuery& q);

struct RateGrid {
  std::vector<double> d, v0, v1, n;
  std::optional<int> ell;
};

struct RateTableRow {
  double d, v0, v1, n;
  std::map<std::string, double> values;  // fixed key set, NaN where not applicable
};

std::vector<std::string> rate_table_columns();
std::vector<RateTableRow> rate_table(const RateGrid& grid, const RateConstants& constants, unsigned threads = 1);

}  // namespace ridgebound
