#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ridgebound/verification.hpp"

namespace ridgebound {

// Fixed-length binary word packed into 64-bit blocks.
class Codeword {
 public:
  Codeword() = default;
  explicit Codeword(std::size_t length) : length_(length), blocks_((length + 63) / 64, 0) {}

  static Codeword from_support(std::size_t length, std::span<const std::size_t> ones);
  // Bit-string with the most significant index (length - 1) first.
  static Codeword from_string(std::string_view bits);

  std::size_t length() const { return length_; }
  std::size_t weight() const;
  bool test(std::size_t i) const { return (blocks_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { blocks_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  std::vector<std::size_t> support() const;
  std::string to_string() const;
  std::span<const std::uint64_t> blocks() const { return blocks_; }

  friend bool operator==(const Codeword&, const Codeword&) = default;
  friend auto operator<=>(const Codeword&, const Codeword&) = default;

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> blocks_;
};

std::size_t hamming_distance(const Codeword& a, const Codeword& b);

// Constant-weight binary code. `min_distance` is the distance the code was built for.
struct Codebook {
  std::size_t length = 0;
  std::size_t weight = 0;
  std::size_t min_distance = 0;
  std::vector<Codeword> words;
  std::string construction;  // "greedy-colex" or "random-rejection"

  std::size_t size() const { return words.size(); }
};

// Exact C(n, k) when it fits in 64 bits.
std::optional<std::uint64_t> binomial_u64(std::uint64_t n, std::uint64_t k);

// log C(n, k); exact integer arithmetic for n <= 60.
double log_binomial(std::int64_t n, std::int64_t k);

// ceil(sqrt(C(M, L))), the cardinality promised for a Hamming-sphere packing
// with distance ceil(L/5).
double code_size_target(std::size_t M, std::size_t L);

inline std::size_t guarantee_min_distance(std::size_t L) { return (L + 4) / 5; }

struct CodeOptions {
  // Enforce M >= 10, L <= M/10, min_dist <= ceil(L/5) and check the size guarantee.
  bool size_guarantee = false;
  // Above this slice size the greedy scan is replaced by seeded random sampling.
  std::uint64_t enumeration_cap = 10'000'000;
  std::uint64_t seed = 0;
  // Consecutive rejections tolerated in random mode.
  std::uint64_t retry_budget = 1'000'000;
  // Stop once this many words are accepted (full scan when empty).
  std::optional<std::size_t> stop_at;
  std::size_t max_words = 5'000'000;
};

// Greedy colex scan of the weight-L slice, accepting any word at distance
// >= min_dist from all accepted words.
Codebook build_constant_weight_code(std::size_t M, std::size_t L, std::size_t min_dist,
                                    const CodeOptions& options = {});

struct CodebookReport : VerificationReport {
  static constexpr std::size_t kInfiniteDistance = std::numeric_limits<std::size_t>::max();
  std::size_t actual_min_distance = kInfiniteDistance;  // sentinel when fewer than two words
  bool all_distances_even = true;
};

CodebookReport verify_codebook(const Codebook& cb, unsigned threads = 1);

}  // namespace ridgebound
