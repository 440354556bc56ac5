#include <doctest.h>

#include <atomic>
#include <stdexcept>

#include "ridgebound/error.hpp"
#include "ridgebound/parallel.hpp"
#include "ridgebound/rational.hpp"
#include "ridgebound/rng.hpp"
#include "ridgebound/verification.hpp"

using namespace ridgebound;

TEST_CASE("philox4x32-10 known answers") {
  CHECK(philox4x32({0, 0, 0, 0}, {0, 0}) ==
        std::array<std::uint32_t, 4>{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(philox4x32({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        std::array<std::uint32_t, 4>{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(philox4x32({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        std::array<std::uint32_t, 4>{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("counter rng is addressable and domain separated") {
  const CounterRng a(42, 1), b(42, 2), c(43, 1);
  CHECK(a.uniform(7, 3, 1) == CounterRng(42, 1).uniform(7, 3, 1));
  CHECK(a.uniform(7, 3, 1) != b.uniform(7, 3, 1));
  CHECK(a.uniform(7, 3, 1) != c.uniform(7, 3, 1));
  CHECK(a.with_domain(2).block(5) == b.block(5));
}

TEST_CASE("counter rng marginals") {
  const CounterRng rng(9, 0);
  const int n = 200000;
  double su = 0, suu = 0, sn = 0, snn = 0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform(static_cast<std::uint32_t>(i));
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
    su += u;
    suu += u * u;
    const double z = rng.normal(static_cast<std::uint32_t>(i), 1);
    sn += z;
    snn += z * z;
  }
  // uniform mean 1/2 (sd 1/sqrt(12 n)), second moment 1/3; normal mean 0, variance 1
  CHECK(std::abs(su / n - 0.5) < 4.0 * std::sqrt(1.0 / 12.0 / n));
  CHECK(std::abs(suu / n - 1.0 / 3.0) < 4.0 * std::sqrt(4.0 / 45.0 / n));
  CHECK(std::abs(sn / n) < 4.0 / std::sqrt(double(n)));
  CHECK(std::abs(snn / n - 1.0) < 4.0 * std::sqrt(2.0 / n));
}

TEST_CASE("counter rng bounded draws") {
  const CounterRng rng(3);
  std::vector<int> hits(7, 0);
  for (std::uint32_t i = 0; i < 70000; ++i) {
    const auto k = rng.below(7, i);
    REQUIRE(k < 7);
    ++hits[k];
  }
  for (int h : hits) CHECK(std::abs(h - 10000) < 500);
}

TEST_CASE("parallel_for writes by index regardless of thread count") {
  for (unsigned threads : {1u, 2u, 8u}) {
    std::vector<std::size_t> out(1000, 0);
    parallel_for(out.size(), threads, [&](std::size_t i) { out[i] = i * i; });
    for (std::size_t i = 0; i < out.size(); ++i) REQUIRE(out[i] == i * i);
  }
}

TEST_CASE("parallel_for propagates exceptions") {
  CHECK_THROWS_AS(parallel_for(100, 4,
                               [](std::size_t i) {
                                 if (i == 57) throw std::runtime_error("boom");
                               }),
                  std::runtime_error);
}

TEST_CASE("make_blocks covers the range with fixed block size") {
  const auto b = make_blocks(10001, 4096);
  REQUIRE(b.size() == 3);
  CHECK(b[0].begin == 0);
  CHECK(b[1].begin == 4096);
  CHECK(b[2].end == 10001);
  CHECK(make_blocks(0, 16).empty());
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(6, -4).num() == -3);
  CHECK(Rational(6, -4).den() == 2);
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(Rational(-1, 3) < Rational(1, 4));
  CHECK(abs(Rational(-3, 7)) == Rational(3, 7));
  CHECK(Rational::parse("-3/2") == Rational(-3, 2));
  CHECK(Rational(-3, 2).to_string() == "-3/2");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS_AS(Rational(INT64_MAX) + Rational(1), std::overflow_error);
}

TEST_CASE("verification report") {
  VerificationReport r;
  r.add("a", true);
  CHECK(r.pass());
  r.add("b", false, "why");
  CHECK_FALSE(r.pass());
  CHECK(r.failures() == std::vector<std::string>{"b"});
  REQUIRE(r.find("b") != nullptr);
  CHECK(r.find("b")->detail == "why");
  CHECK(r.find("c") == nullptr);
}

TEST_CASE("require throws PreconditionError") {
  CHECK_NOTHROW(require(true, "x"));
  CHECK_THROWS_AS(require(false, "x"), PreconditionError);
}
