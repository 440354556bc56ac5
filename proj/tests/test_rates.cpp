#include <doctest.h>

#include <cmath>
#include <set>

#include "ridgebound/error.hpp"
#include "ridgebound/rates.hpp"

using namespace ridgebound;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("closed form at the worked example") {
  RateQuery q;
  q.d = 1000;
  q.v0 = 2;
  q.v1 = 1;
  q.n = 10000;
  const auto r = compute_rate(q);
  CHECK(r.regime == Regime::high_d);
  CHECK(r.eps_n_sq == doctest::Approx(std::sqrt(2.0 * std::log(501.0) / 10000.0)).epsilon(1e-15));
  CHECK(r.eps_n_sq == doctest::Approx(0.0352607603).epsilon(1e-9));
  CHECK(rel(r.eps_n_sq_matched, r.eps_n_sq) < 1e-8);
}

TEST_CASE("regimes coincide at d = v0") {
  CHECK(rate_sine(7.0, 7.0, 1.3, 100.0, Regime::high_d) == doctest::Approx(rate_sine(7.0, 7.0, 1.3, 100.0, Regime::low_d)));
  CHECK(sine_regime(5, 5) == Regime::high_d);
  CHECK(sine_regime(3, 5) == Regime::low_d);
}

TEST_CASE("matching agrees with closed forms over grids") {
  // 3 x 3 x 3 x 3 = 81 points per family
  const std::vector<double> ds{3, 40, 900}, v0s{1, 4, 20}, v1s{0.5, 1, 3}, ns{10, 1e3, 1e6};
  int points = 0;
  for (double d : ds)
    for (double v0 : v0s)
      for (double v1 : v1s)
        for (double n : ns) {
          const Regime r = sine_regime(d, v0);
          const double closed = rate_sine(d, v0, v1, n, r);
          const double matched = solve_matching(log_packing_sine(d, v0, v1, r), n);
          CAPTURE(d);
          CAPTURE(v0);
          CHECK(rel(matched, closed) < 1e-8);
          ++points;
        }
  CHECK(points == 81);

  const std::vector<double> hd{50, 400, 5000}, hv0{1, 2, 3};
  for (double d : hd)
    for (double v0 : hv0)
      for (double v1 : v1s)
        for (double n : ns) {
          const double closed = rate_hermite(d, v0, v1, n);
          const double matched = solve_matching(log_packing_hermite(d, v0, v1), n);
          CHECK(rel(matched, closed) < 1e-8);
        }
}

TEST_CASE("constants scale the closed forms") {
  RateQuery q;
  q.d = 3;
  q.v0 = 20;
  q.n = 500;
  q.constants.set("c7", 2.5);
  const auto r = compute_rate(q);
  CHECK(r.regime == Regime::low_d);
  CHECK(r.eps_n_sq == doctest::Approx(2.5 * std::sqrt(3.0 * std::log1p(20.0 / 3.0) / 500.0)));
  CHECK(r.formula.find("c7") != std::string::npos);
}

TEST_CASE("rate constants validation") {
  RateConstants c;
  CHECK(c.get("gamma") == doctest::Approx(1.0 / 3.0));
  CHECK(c.get("c10") == 1.0);
  c.set("gamma", 0.25);
  CHECK(c.get("gamma") == 0.25);
  CHECK_THROWS_AS(c.set("gamma", 0.5), PreconditionError);
  CHECK_THROWS_AS(c.set("c3", 0.0), PreconditionError);
  CHECK_THROWS_AS(c.set("c11", 1.0), PreconditionError);
  CHECK_THROWS_AS(c.get("nope"), PreconditionError);
}

TEST_CASE("hermite rates need d > v0^2") {
  CHECK_THROWS_AS(rate_hermite(4, 2, 1, 10), PreconditionError);
  RateQuery q;
  q.family = Family::hermite;
  q.d = 4;
  q.v0 = 2;
  CHECK_THROWS_AS(q.validate(), PreconditionError);
}

TEST_CASE("low-d growth condition holds whenever d >= 50 log n") {
  int checked = 0;
  for (double n : {10.0, 1e2, 1e3, 1e4, 1e6})
    for (double d : {120.0, 350.0, 700.0, 2000.0})
      for (double mult : {1.0, 2.0, 10.0, 100.0})
        for (double v1 : {0.5, 1.0, 2.0}) {
          if (d < 50.0 * std::log(n)) continue;
          const double v0 = d * mult;  // the v0 >= d regime in which this condition is posed
          const auto c = growth_condition_low_d(d, v0, v1, n, 1.0);
          CAPTURE(n);
          CAPTURE(d);
          CAPTURE(v0);
          CHECK(c.lhs > c.rhs);
          ++checked;
        }
  CHECK(checked > 100);
}

TEST_CASE("high-d growth condition fails once n outgrows the lattice") {
  // rhs grows like n^(1/v0); for v0 = 1 it is linear in n
  CHECK(growth_condition_high_d(10, 1, 1, 1, 1).lhs > growth_condition_high_d(10, 1, 1, 1, 1).rhs);
  CHECK_FALSE(growth_condition_high_d(10, 1, 1, 1e6, 1).lhs > growth_condition_high_d(10, 1, 1, 1e6, 1).rhs);
  // large v0 makes the root flat, so the condition holds for a wide range of n
  const auto c = growth_condition_high_d(1000, 50, 1, 1e6, 1);
  CHECK(c.lhs > c.rhs);
}

TEST_CASE("dimension and order conditions for hermite nets") {
  const auto dim = hermite_dimension_condition(10000, 2, 1, 1e4, 1);
  CHECK(dim.lhs == 2500.0);
  CHECK(dim.lhs > dim.rhs);
  const auto small = hermite_order_condition(2, 10000, 2, 1, 1e4, 1);
  const auto large = hermite_order_condition(40, 10000, 2, 1, 1e4, 1);
  CHECK_FALSE(small.lhs > small.rhs);
  CHECK(large.lhs > large.rhs);
}

TEST_CASE("check_conditions reports the family's conditions") {
  RateQuery q;
  q.d = 1000;
  q.v0 = 2;
  q.n = 10000;
  const auto s = check_conditions(q);
  for (const char* k : {"growth_high_d", "growth_low_d", "eps_floor_quarter", "eps_floor_half"}) CHECK(s.contains(k));
  for (const auto& [k, c] : s) CHECK(c.holds == (c.lhs > c.rhs));

  q.family = Family::hermite;
  CHECK_THROWS_AS(check_conditions(q), PreconditionError);
  q.ell = 30;
  const auto h = check_conditions(q);
  for (const char* k : {"hermite_dimension", "hermite_order", "hermite_order_sufficient"}) CHECK(h.contains(k));
  CHECK(h.at("hermite_order_sufficient").rhs == doctest::Approx(4.0 * std::log(250.0)));
}

TEST_CASE("comparison curves") {
  RateQuery q;
  q.d = 10;
  q.v0 = 3;
  q.v1 = 2;
  q.n = 1000;
  const auto c = comparison_curves(q);
  CHECK(c.at("upper_resolvability") == doctest::Approx(2.0 * 2.0 * std::sqrt(10.0 * std::log(1000.0) / 1000.0)));
  CHECK(c.at("upper_low_dim") == doctest::Approx(std::pow(10.0 * 9.0 * 4.0 / 1000.0, 0.5 + 1.0 / 22.0)));
  CHECK(c.at("lower_sine_d_gt_v0") == doctest::Approx(rate_sine(10.0, 3.0, 2.0, 1000.0, Regime::high_d)));
  CHECK(c.at("lower_hermite") == doctest::Approx(rate_hermite(10, 3, 2, 1000)));
  q.v0 = 4;
  CHECK(std::isnan(comparison_curves(q).at("lower_hermite")));
  CHECK(upper_low_dim_exponent(1) == 0.75);
  CHECK(lower_unconstrained_exponent(2) == 0.75);
}

TEST_CASE("rate table has a fixed column set and is thread invariant") {
  RateGrid g;
  g.d = {5, 500};
  g.v0 = {1, 2, 50};
  g.v1 = {1};
  g.n = {100, 10000};
  g.ell = 20;
  const auto a = rate_table(g, {}, 1), b = rate_table(g, {}, 8);
  REQUIRE(a.size() == 12);
  const auto cols = rate_table_columns();
  const std::set<std::string> colset(cols.begin(), cols.end());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].values.size() == cols.size());
    for (const auto& [k, v] : a[i].values) {
      CHECK(colset.contains(k));
      const double w = b[i].values.at(k);
      CHECK(((std::isnan(v) && std::isnan(w)) || v == w));
    }
  }
}

TEST_CASE("solve_matching rejects bad input") {
  CHECK_THROWS_AS(solve_matching([](double) { return 1.0; }, 0.0), PreconditionError);
  CHECK(solve_matching([](double) { return 4.0; }, 100.0) == doctest::Approx(0.04).epsilon(1e-9));
}
