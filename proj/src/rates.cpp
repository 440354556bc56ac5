#include "ridgebound/rates.hpp"

#include <cmath>
#include <limits>

#include "ridgebound/error.hpp"
#include "ridgebound/parallel.hpp"

namespace ridgebound {

RateConstants::RateConstants() {
  for (int i = 1; i <= 10; ++i) values_["c" + std::to_string(i)] = 1.0;
  values_["c4_upper"] = 1.0;
  values_["c_ell"] = 1.0;
  values_["gamma"] = 1.0 / 3.0;
}

double RateConstants::get(const std::string& name) const {
  auto it = values_.find(name);
  if (it == values_.end()) throw PreconditionError("unknown rate constant '" + name + "'");
  return it->second;
}

void RateConstants::set(const std::string& name, double value) {
  if (!values_.contains(name)) throw PreconditionError("unknown rate constant '" + name + "'");
  if (name == "gamma")
    require(value == 0.25 || std::abs(value - 1.0 / 3.0) < 1e-15, "gamma must be 1/4 or 1/3");
  else
    require(value > 0.0, "rate constant " + name + " must be positive");
  values_[name] = value;
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::high_d: return "d>v0";
    case Regime::low_d: return "v0>d";
    case Regime::hermite: return "hermite";
  }
  return "unknown";
}

double rate_hermite(double d, double v0, double v1, double n, double constant) {
  require(d > v0 * v0, "rate_hermite: need d > v0^2");
  return constant * std::sqrt(v0 * v0 * v1 * v1 * std::log(d / (v0 * v0)) / n);
}

void RateQuery::validate() const {
  require(d > 0 && v0 > 0 && v1 > 0 && n > 0, "rate query: need d, v0, v1, n > 0");
  if (family == Family::hermite) require(d > v0 * v0, "rate query (hermite): need d > v0^2");
}

ConditionOutcome growth_condition_high_d(double d, double v0, double v1, double n, double c4) {
  return {false, d / v0 + 1.0, std::pow(c4 * v1 * v1 * n / (v0 * std::log(1.0 + d / v0)), 1.0 / v0),
          "d/v0 + 1 > (c4 v1^2 n / (v0 log(1 + d/v0)))^(1/v0)"};
}

ConditionOutcome growth_condition_low_d(double d, double v0, double v1, double n, double c5) {
  return {false, v0 / d + 1.0, std::pow(c5 * v1 * v1 * n / (d * std::log(1.0 + v0 / d)), 1.0 / d),
          "v0/d + 1 > (c5 v1^2 n / (d log(1 + v0/d)))^(1/d)"};
}

ConditionOutcome hermite_dimension_condition(double d, double v0, double v1, double n, double c8) {
  const double v0sq = v0 * v0;
  return {false, d / v0sq, std::pow(c8 * v1 * v1 * n / (v0sq * std::log(d / v0sq)), 2.0 / v0sq),
          "d/v0^2 > (c8 v1^2 n / (v0^2 log(d/v0^2)))^(2/v0^2)"};
}

ConditionOutcome hermite_order_condition(int ell, double d, double v0, double v1, double n, double c9) {
  const double v0sq = v0 * v0;
  return {false, static_cast<double>(ell), c9 * std::log(v1 * v1 * n / (v0sq * std::log(d / v0sq))),
          "l > c9 log(v1^2 n / (v0^2 log(d/v0^2)))"};
}

namespace {

ConditionOutcome strict(ConditionOutcome c) {
  c.holds = c.lhs > c.rhs;
  return c;
}

}  // namespace

std::map<std::string, ConditionOutcome> check_conditions(const RateQuery& q) {
  q.validate();
  const auto& c = q.constants;
  std::map<std::string, ConditionOutcome> out;
  if (q.family == Family::sine) {
    out["growth_high_d"] = strict(growth_condition_high_d(q.d, q.v0, q.v1, q.n, c.get("c4")));
    out["growth_low_d"] = strict(growth_condition_low_d(q.d, q.v0, q.v1, q.n, c.get("c5")));
    // packing validity floors at the matched eps_n (unit constant)
    const Regime r = q.regime();
    const double eps_n = std::sqrt(rate_sine(q.d, q.v0, q.v1, q.n, r));
    const double base = r == Regime::high_d ? 1.0 + q.d / q.v0 : 1.0 + q.v0 / q.d;
    const double power = r == Regime::high_d ? q.v0 : q.d;
    const std::string b = r == Regime::high_d ? "(1 + d/v0)^(v0" : "(1 + v0/d)^(d";
    out["eps_floor_quarter"] = strict({false, eps_n, q.v1 / std::pow(base, power / 4.0), "eps_n > v1 / " + b + "/4)"});
    out["eps_floor_half"] = strict({false, eps_n, q.v1 / std::pow(base, power / 2.0), "eps_n > v1 / " + b + "/2)"});
  } else {
    if (!q.ell) throw PreconditionError("check_conditions: hermite order l is required for the hermite order condition");
    out["hermite_dimension"] = strict(hermite_dimension_condition(q.d, q.v0, q.v1, q.n, c.get("c8")));
    out["hermite_order"] = strict(hermite_order_condition(*q.ell, q.d, q.v0, q.v1, q.n, c.get("c9")));
    const double v0sq = q.v0 * q.v0;
    ConditionOutcome suff{false, static_cast<double>(*q.ell), c.get("c_ell") * v0sq * std::log(q.d / v0sq),
                          "l >= c_ell v0^2 log(d/v0^2)"};
    suff.holds = suff.lhs >= suff.rhs;
    out["hermite_order_sufficient"] = suff;
  }
  return out;
}

double solve_matching(const std::function<double(double)>& log_packing, double n, const MatchingOptions& opt) {
  require(n > 0.0, "solve_matching: need n > 0");
  const auto g = [&](double eps) { return eps * eps - log_packing(eps) / n; };
  double lo = 1.0, hi = 1.0;
  while (g(hi) <= 0.0) {
    hi *= 2.0;
    if (hi > 1e150) throw ConvergenceError("solve_matching: no sign change on the search bracket");
  }
  while (g(lo) >= 0.0) {
    lo *= 0.5;
    if (lo < 1e-150) throw ConvergenceError("solve_matching: no sign change on the search bracket");
  }
  // eps^2 relative accuracy is about twice the relative width in eps
  for (int it = 0; it < opt.max_iterations; ++it) {
    if (hi / lo - 1.0 <= 0.25 * opt.rel_tol) {
      const double eps = std::sqrt(lo * hi);
      return eps * eps;
    }
    const double mid = std::sqrt(lo * hi);
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  throw ConvergenceError("solve_matching: iteration budget exhausted");
}

std::function<double(double)> log_packing_sine(double d, double v0, double v1, Regime regime) {
  const double k = regime == Regime::low_d ? d * std::log1p(v0 / d) : v0 * std::log1p(d / v0);
  return [k, v1](double eps) { return k * (v1 / eps) * (v1 / eps); };
}

std::function<double(double)> log_packing_hermite(double d, double v0, double v1) {
  const double k = std::log(d / (v0 * v0));
  return [k, v0, v1](double eps) { return k * (v0 * v1 / eps) * (v0 * v1 / eps); };
}

std::map<std::string, double> comparison_curves(const RateQuery& q) {
  require(q.d > 0 && q.v0 > 0 && q.v1 > 0 && q.n > 0, "comparison_curves: need positive inputs");
  const auto& c = q.constants;
  const double d = q.d, v0 = q.v0, v1 = q.v1, n = q.n;
  std::map<std::string, double> out;
  out["upper_resolvability"] = 2.0 * v1 * std::sqrt(c.get("c1") * d * std::log(n) / n);
  out["upper_low_dim"] = c.get("c2") * std::pow(d * v0 * v0 * v1 * v1 / n, upper_low_dim_exponent(d));
  out["lower_unconstrained_v0"] =
      c.get("c3") * std::pow(v1, d / (d + 2.0)) * std::pow(1.0 / (std::pow(d, 4) * n), lower_unconstrained_exponent(d));
  const double hd = v0 * v0 * std::pow(v1, 4) * std::log(d + 1.0) / n;
  out["upper_high_dim"] = c.get("c4_upper") * std::pow(hd, c.get("gamma"));
  out["upper_high_dim_gamma_1_3"] = c.get("c4_upper") * std::pow(hd, 1.0 / 3.0);
  out["upper_high_dim_gamma_1_4"] = c.get("c4_upper") * std::pow(hd, 0.25);
  out["lower_sine_d_gt_v0"] = rate_sine(d, v0, v1, n, Regime::high_d, c.get("c6"));
  out["lower_sine_v0_gt_d"] = rate_sine(d, v0, v1, n, Regime::low_d, c.get("c7"));
  out["lower_hermite"] = d > v0 * v0 ? rate_hermite(d, v0, v1, n, c.get("c10")) : std::numeric_limits<double>::quiet_NaN();
  return out;
}

RateResult compute_rate(const RateQuery& q) {
  q.validate();
  RateResult r;
  r.family = q.family;
  r.regime = q.regime();
  r.constants = q.constants;
  const auto& c = q.constants;
  switch (r.regime) {
    case Regime::high_d: {
      const double k = c.get("c6");
      r.eps_n_sq = rate_sine(q.d, q.v0, q.v1, q.n, r.regime, k);
      const auto base = log_packing_sine(q.d, q.v0, q.v1, r.regime);
      r.eps_n_sq_matched = solve_matching([&](double e) { return k * k * base(e); }, q.n);
      r.formula = "c6 * (v0 v1^2 log(1 + d/v0) / n)^(1/2)";
      break;
    }
    case Regime::low_d: {
      const double k = c.get("c7");
      r.eps_n_sq = rate_sine(q.d, q.v0, q.v1, q.n, r.regime, k);
      const auto base = log_packing_sine(q.d, q.v0, q.v1, r.regime);
      r.eps_n_sq_matched = solve_matching([&](double e) { return k * k * base(e); }, q.n);
      r.formula = "c7 * (d v1^2 log(1 + v0/d) / n)^(1/2)";
      break;
    }
    case Regime::hermite: {
      const double k = c.get("c10");
      r.eps_n_sq = rate_hermite(q.d, q.v0, q.v1, q.n, k);
      const auto base = log_packing_hermite(q.d, q.v0, q.v1);
      r.eps_n_sq_matched = solve_matching([&](double e) { return k * k * base(e); }, q.n);
      r.formula = "c10 * (v0^2 v1^2 log(d/v0^2) / n)^(1/2)";
      break;
    }
  }
  if (q.family == Family::sine || q.ell) r.conditions = check_conditions(q);
  r.comparison = comparison_curves(q);
  return r;
}

std::vector<std::string> rate_table_columns() {
  return {"lower_sine_d_gt_v0",
          "lower_sine_v0_gt_d",
          "lower_hermite",
          "eps_n_sq_matched",
          "upper_resolvability",
          "upper_low_dim",
          "lower_unconstrained_v0",
          "upper_high_dim_gamma_1_3",
          "upper_high_dim_gamma_1_4",
          "growth_high_d_holds",
          "growth_high_d_log_slack",
          "growth_low_d_holds",
          "growth_low_d_log_slack",
          "hermite_dimension_holds",
          "hermite_dimension_log_slack",
          "hermite_order_holds",
          "hermite_order_slack"};
}

std::vector<RateTableRow> rate_table(const RateGrid& grid, const RateConstants& constants, unsigned threads) {
  std::vector<RateTableRow> rows;
  for (double d : grid.d)
    for (double v0 : grid.v0)
      for (double v1 : grid.v1)
        for (double n : grid.n) rows.push_back({d, v0, v1, n, {}});

  const double nan = std::numeric_limits<double>::quiet_NaN();
  parallel_for(rows.size(), threads, [&](std::size_t i) {
    auto& row = rows[i];
    RateQuery q{Family::sine, row.d, row.v0, row.v1, row.n, grid.ell, constants};
    auto curves = comparison_curves(q);
    for (const auto& col : rate_table_columns()) row.values[col] = nan;
    for (const auto& [k, v] : curves)
      if (row.values.contains(k)) row.values[k] = v;
    const auto r = compute_rate(q);
    row.values["eps_n_sq_matched"] = r.eps_n_sq_matched;
    const auto growth_hi = growth_condition_high_d(row.d, row.v0, row.v1, row.n, constants.get("c4"));
    const auto growth_lo = growth_condition_low_d(row.d, row.v0, row.v1, row.n, constants.get("c5"));
    row.values["growth_high_d_holds"] = growth_hi.lhs > growth_hi.rhs;
    row.values["growth_high_d_log_slack"] = std::log(growth_hi.lhs) - std::log(growth_hi.rhs);
    row.values["growth_low_d_holds"] = growth_lo.lhs > growth_lo.rhs;
    row.values["growth_low_d_log_slack"] = std::log(growth_lo.lhs) - std::log(growth_lo.rhs);
    if (row.d > row.v0 * row.v0) {
      const auto dim = hermite_dimension_condition(row.d, row.v0, row.v1, row.n, constants.get("c8"));
      row.values["hermite_dimension_holds"] = dim.lhs > dim.rhs;
      row.values["hermite_dimension_log_slack"] = std::log(dim.lhs) - std::log(dim.rhs);
      if (grid.ell) {
        const auto order = hermite_order_condition(*grid.ell, row.d, row.v0, row.v1, row.n, constants.get("c9"));
        row.values["hermite_order_holds"] = order.lhs > order.rhs;
        row.values["hermite_order_slack"] = order.lhs - order.rhs;
      }
    }
  });
  return rows;
}

}  // namespace ridgebound
