#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "ridgebound/codes.hpp"
#include "ridgebound/error.hpp"
#include "ridgebound/lattice.hpp"

using namespace ridgebound;

namespace {

std::vector<int> ints(const RidgeDirection& r) {
  std::vector<int> out;
  for (const auto& c : r.coordinates) {
    REQUIRE(c.den() == 1);
    out.push_back(static_cast<int>(c.num()));
  }
  return out;
}

}  // namespace

TEST_CASE("lattice counts and sets match nested enumeration") {
  for (int d = 1; d <= 5; ++d)
    for (int v0 = 0; v0 <= 4; ++v0) {
      CAPTURE(d);
      CAPTURE(v0);
      const auto ball = oracle::l1_ball(d, v0);
      CHECK(l1_lattice_count(d, v0) == ball.size());

      std::set<std::vector<int>> want_full, want_canon, got_full, got_canon;
      for (const auto& x : ball) {
        want_full.insert(x);  // non-canonical mode keeps the origin
        if (std::all_of(x.begin(), x.end(), [](int c) { return c == 0; })) continue;
        if (oracle::first_nonzero_positive(x)) want_canon.insert(x);
      }
      const auto full = enumerate_l1_lattice(d, v0, false);
      const auto canon = enumerate_l1_lattice(d, v0, true);
      for (const auto& r : full) got_full.insert(ints(r));
      for (const auto& r : canon) got_canon.insert(ints(r));
      CHECK(full.size() == want_full.size());
      CHECK(canon.size() == want_canon.size());
      CHECK(got_full == want_full);
      CHECK(got_canon == want_canon);
    }
}

TEST_CASE("binomial count over-counts the l1 ball at d = v0 = 2") {
  const auto b = lattice_count_bounds(2, 2);
  CHECK(b.binomial_count() == 15.0);
  CHECK(l1_lattice_count(2, 2) == 13);
}

TEST_CASE("lattice count bounds") {
  const auto b = lattice_count_bounds(10, 3);
  CHECK(b.log_lower_large_d == doctest::Approx(3 * std::log(1 + 10.0 / 3)));
  CHECK(b.log_lower_large_v0 == doctest::Approx(10 * std::log(1 + 3.0 / 10)));
  CHECK(b.binomial_count() == static_cast<double>(oracle::binomial(23, 20)));
  // both lower bounds are below the exact count
  for (int d = 1; d <= 6; ++d)
    for (int v0 = 1; v0 <= 6; ++v0) {
      const auto c = lattice_count_bounds(d, v0);
      const double exact = static_cast<double>(l1_lattice_count(d, v0));
      CHECK(c.lower_large_d() <= exact);
      CHECK(c.lower_large_v0() <= exact);
    }
}

TEST_CASE("direction norms are exact") {
  const auto dirs = enumerate_l1_lattice(3, 2, true);
  for (const auto& r : dirs) {
    Rational l1, l2;
    for (const auto& c : r.coordinates) {
      l1 += abs(c);
      l2 += c * c;
    }
    CHECK(r.l1_norm == l1);
    CHECK(r.l2_norm_sq == l2);
    CHECK(r.l2_norm == doctest::Approx(std::sqrt(l2.to_double())));
    CHECK(r.kind == DirectionKind::lattice);
  }
  CHECK(dot(dirs[0], negate(dirs[0])) == -dirs[0].l2_norm_sq);
}

TEST_CASE("enumeration respects the coordinate cap") {
  CHECK_THROWS_AS(enumerate_l1_lattice(30, 6, true, 1000), CapExceededError);
}

TEST_CASE("hermite directions from a unit code") {
  const int d = 40, v0 = 2;
  CodeOptions opt;
  opt.stop_at = 60;
  const auto code = build_constant_weight_code(d, v0 * v0, guarantee_min_distance(v0 * v0), opt);
  const auto dirs = hermite_directions(code, v0, d);
  REQUIRE(dirs.size() == code.size());
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    CHECK(dirs[i].l2_norm_sq == Rational(1));
    CHECK(dirs[i].l1_norm == Rational(v0));
    CHECK(dirs[i].kind == DirectionKind::unit_code);
    for (std::size_t j = i + 1; j < std::min<std::size_t>(dirs.size(), i + 40); ++j)
      CHECK(dot(dirs[i], dirs[j]) <= Rational(9, 10));
  }
}

TEST_CASE("hermite directions reject unsuitable codes") {
  CodeOptions opt;
  opt.stop_at = 10;
  const auto wrong_weight = build_constant_weight_code(40, 3, 1, opt);
  CHECK_THROWS_AS(hermite_directions(wrong_weight, 2, 40), PreconditionError);
  const auto wrong_length = build_constant_weight_code(39, 4, 1, opt);
  CHECK_THROWS_AS(hermite_directions(wrong_length, 2, 40), PreconditionError);
  const auto too_dense = build_constant_weight_code(20, 4, 1, opt);
  try {
    hermite_directions(too_dense, 2, 20);
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("v0^2 <= d/10") != std::string::npos);
  }
}

TEST_CASE("floor_v0 records a warning for fractional input") {
  std::vector<std::string> warnings;
  CHECK(floor_v0(3.7, &warnings) == 3);
  CHECK(warnings.size() == 1);
  CHECK(floor_v0(2.0, &warnings) == 2);
  CHECK(warnings.size() == 1);
}
