#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace ridgebound {

// Philox4x32-10 (Salmon et al., "Parallel random numbers: as easy as 1, 2, 3").
// Pure function of (counter, key): no state, so draws can be addressed by index.
inline std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                               std::array<std::uint32_t, 2> key) {
  constexpr std::uint32_t kMul0 = 0xD2511F53u, kMul1 = 0xCD9E8D57u;
  constexpr std::uint32_t kWeyl0 = 0x9E3779B9u, kWeyl1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32), lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32), lo1 = static_cast<std::uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

// Counter-based stream keyed by a 64-bit seed and a domain tag. A draw is
// addressed by up to three 32-bit indices (sample, coordinate, trial), so results
// never depend on evaluation order or thread count.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint32_t domain = 0) : seed_(seed), domain_(domain) {}

  std::uint64_t seed() const { return seed_; }
  std::uint32_t domain() const { return domain_; }
  CounterRng with_domain(std::uint32_t domain) const { return CounterRng(seed_, domain); }

  std::array<std::uint32_t, 4> block(std::uint32_t a, std::uint32_t b = 0, std::uint32_t c = 0) const {
    return philox4x32({a, b, c, domain_},
                      {static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)});
  }

  // Uniform on the open interval (0, 1), 53 bits.
  double uniform(std::uint32_t a, std::uint32_t b = 0, std::uint32_t c = 0) const {
    const auto r = block(a, b, c);
    return to_open_unit(r[0], r[1]);
  }

  // Standard normal by Box-Muller on the two 64-bit halves of one block.
  double normal(std::uint32_t a, std::uint32_t b = 0, std::uint32_t c = 0) const {
    const auto r = block(a, b, c);
    const double u1 = to_open_unit(r[0], r[1]);
    const double u2 = to_open_unit(r[2], r[3]);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  // Uniform integer in [0, bound) by 64-bit multiply-shift; bias < bound / 2^64.
  std::uint64_t below(std::uint64_t bound, std::uint32_t a, std::uint32_t b = 0, std::uint32_t c = 0) const {
    const auto r = block(a, b, c);
    const std::uint64_t x = (static_cast<std::uint64_t>(r[0]) << 32) | r[1];
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * bound) >> 64);
  }

 private:
  static double to_open_unit(std::uint32_t hi, std::uint32_t lo) {
    const std::uint64_t x = (static_cast<std::uint64_t>(hi) << 32) | lo;
    return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
  }

  std::uint64_t seed_;
  std::uint32_t domain_;
};

}  // namespace ridgebound
