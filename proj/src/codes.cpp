#include "ridgebound/codes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>
#include <set>

#include "ridgebound/error.hpp"
#include "ridgebound/parallel.hpp"
#include "ridgebound/rng.hpp"

namespace ridgebound {

Codeword Codeword::from_support(std::size_t length, std::span<const std::size_t> ones) {
  Codeword w(length);
  for (auto i : ones) {
    require(i < length, "codeword support index out of range");
    w.set(i);
  }
  return w;
}

Codeword Codeword::from_string(std::string_view bits) {
  Codeword w(bits.size());
  for (std::size_t pos = 0; pos < bits.size(); ++pos) {
    const char c = bits[pos];
    require(c == '0' || c == '1', "codeword string must contain only '0' and '1'");
    if (c == '1') w.set(bits.size() - 1 - pos);
  }
  return w;
}

std::size_t Codeword::weight() const {
  std::size_t w = 0;
  for (auto b : blocks_) w += static_cast<std::size_t>(std::popcount(b));
  return w;
}

void Codeword::set(std::size_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if (value)
    blocks_[i / 64] |= mask;
  else
    blocks_[i / 64] &= ~mask;
}

std::vector<std::size_t> Codeword::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < length_; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

std::string Codeword::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i)
    if (test(i)) s[length_ - 1 - i] = '1';
  return s;
}

std::size_t hamming_distance(const Codeword& a, const Codeword& b) {
  require(a.length() == b.length(), "hamming_distance: length mismatch");
  const auto x = a.blocks(), y = b.blocks();
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += static_cast<std::size_t>(std::popcount(x[i] ^ y[i]));
  return d;
}

std::optional<std::uint64_t> binomial_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // exact: r * (n-k+i) is divisible by i at every step
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(r);
}

double log_binomial(std::int64_t n, std::int64_t k) {
  require(n >= 0 && k >= 0 && k <= n, "log_binomial: need 0 <= k <= n");
  if (n <= 60) return std::log(static_cast<double>(*binomial_u64(n, k)));
  const std::int64_t m = std::min(k, n - k);
  if (m <= 256) {
    double s = 0.0;
    for (std::int64_t i = 1; i <= m; ++i)
      s += std::log1p(static_cast<double>(n - m) / static_cast<double>(i));
    return s;
  }
  return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

double code_size_target(std::size_t M, std::size_t L) {
  if (auto c = binomial_u64(M, L)) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(*c)));
    while (static_cast<unsigned __int128>(r) * r > *c) --r;
    while (static_cast<unsigned __int128>(r) * r < *c) ++r;
    return static_cast<double>(r);
  }
  return std::ceil(std::exp(0.5 * log_binomial(static_cast<std::int64_t>(M), static_cast<std::int64_t>(L))));
}

namespace {

class Acceptor {
 public:
  Acceptor(std::size_t min_dist, std::size_t max_words) : min_dist_(min_dist), max_words_(max_words) {}

  // Distinct constant-weight words are at even distance >= 2, so for
  // min_dist <= 2 only duplicates can be rejected.
  bool offer(Codeword w, bool may_repeat) {
    if (min_dist_ <= 2) {
      if (may_repeat && !seen_.insert(w).second) return false;
    } else {
      for (const auto& a : accepted_)
        if (hamming_distance(a, w) < min_dist_) return false;
    }
    if (accepted_.size() >= max_words_)
      throw CapExceededError("constant-weight code exceeds max_words=" + std::to_string(max_words_) +
                             "; set stop_at to bound the code size");
    accepted_.push_back(std::move(w));
    return true;
  }
  std::size_t size() const { return accepted_.size(); }
  std::vector<Codeword> take() { return std::move(accepted_); }

 private:
  std::size_t min_dist_;
  std::size_t max_words_;
  std::vector<Codeword> accepted_;
  std::set<Codeword> seen_;
};

}  // namespace

Codebook build_constant_weight_code(std::size_t M, std::size_t L, std::size_t min_dist, const CodeOptions& options) {
  require(M >= 1, "constant-weight code: need M >= 1");
  require(L <= M, "constant-weight code: infeasible parameters, L > M");
  if (options.size_guarantee) {
    require(M >= 10, "constant-weight code (guarantee mode): need M >= 10");
    require(L >= 1 && 10 * L <= M, "constant-weight code (guarantee mode): need 1 <= L <= M/10");
    require(min_dist <= guarantee_min_distance(L), "constant-weight code (guarantee mode): need min_dist <= ceil(L/5)");
  }

  Codebook cb;
  cb.length = M;
  cb.weight = L;
  cb.min_distance = min_dist;
  Acceptor acceptor(min_dist, options.max_words);
  const std::size_t stop = options.stop_at.value_or(std::numeric_limits<std::size_t>::max());
  const auto slice = binomial_u64(M, L);

  if (slice && *slice <= options.enumeration_cap) {
    cb.construction = "greedy-colex";
    std::vector<std::size_t> c(L);
    for (std::size_t i = 0; i < L; ++i) c[i] = i;
    while (acceptor.size() < stop) {
      acceptor.offer(Codeword::from_support(M, c), false);
      // colex successor: bump the lowest element that can move, reset those below it
      std::size_t i = 0;
      while (i < L && c[i] + 1 == (i + 1 < L ? c[i + 1] : M)) ++i;
      if (i == L) break;
      ++c[i];
      for (std::size_t j = 0; j < i; ++j) c[j] = j;
    }
  } else {
    cb.construction = "random-rejection";
    const double target = code_size_target(M, L);
    const auto goal = static_cast<std::size_t>(std::min(static_cast<double>(stop), target));
    require(static_cast<double>(goal) <= static_cast<double>(options.max_words),
            "constant-weight code: random-mode target exceeds max_words");
    const CounterRng rng(options.seed, /*domain=*/0xC0DEu);
    std::uint64_t draw = 0, misses = 0;
    std::vector<std::size_t> ones;
    std::vector<bool> chosen(M);
    while (acceptor.size() < goal) {
      // Floyd's algorithm for a uniform L-subset of [0, M)
      ones.clear();
      std::fill(chosen.begin(), chosen.end(), false);
      for (std::size_t j = M - L; j < M; ++j) {
        const auto t = static_cast<std::size_t>(rng.below(j + 1, static_cast<std::uint32_t>(draw),
                                                          static_cast<std::uint32_t>(draw >> 32),
                                                          static_cast<std::uint32_t>(j)));
        const std::size_t pick = chosen[t] ? j : t;
        chosen[pick] = true;
        ones.push_back(pick);
      }
      ++draw;
      if (acceptor.offer(Codeword::from_support(M, ones), true)) {
        misses = 0;
      } else if (++misses > options.retry_budget) {
        throw ConvergenceError("constant-weight code: retry budget exhausted after " + std::to_string(acceptor.size()) +
                               " words");
      }
    }
  }

  cb.words = acceptor.take();
  if (options.size_guarantee && !options.stop_at) {
    const double target = code_size_target(M, L);
    if (static_cast<double>(cb.words.size()) < target)
      throw ConvergenceError("constant-weight code: size " + std::to_string(cb.words.size()) +
                             " below ceil(sqrt(C(M,L)))");
  }
  return cb;
}

CodebookReport verify_codebook(const Codebook& cb, unsigned threads) {
  CodebookReport report;
  const auto& words = cb.words;

  bool lengths_ok = true, weights_ok = true;
  for (const auto& w : words) {
    lengths_ok = lengths_ok && w.length() == cb.length;
    weights_ok = weights_ok && w.weight() == cb.weight;
  }
  report.add("length", lengths_ok, "every word has length M=" + std::to_string(cb.length));
  report.add("weight", weights_ok, "every word has weight L=" + std::to_string(cb.weight));
  if (!lengths_ok) {
    report.add("min_distance", false, "distances undefined for mixed lengths");
    return report;
  }

  // Row-wise minima so the reduction is independent of scheduling.
  std::vector<std::size_t> row_min(words.size(), CodebookReport::kInfiniteDistance);
  std::vector<char> row_even(words.size(), 1);
  parallel_for(words.size(), threads, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      const std::size_t d = hamming_distance(words[i], words[j]);
      row_min[i] = std::min(row_min[i], d);
      if (d % 2 != 0) row_even[i] = 0;
    }
  });
  for (std::size_t i = 0; i < words.size(); ++i) {
    report.actual_min_distance = std::min(report.actual_min_distance, row_min[i]);
    report.all_distances_even = report.all_distances_even && row_even[i];
  }

  const bool infinite = report.actual_min_distance == CodebookReport::kInfiniteDistance;
  const std::string actual = infinite ? "inf" : std::to_string(report.actual_min_distance);
  report.add("distinct", infinite || report.actual_min_distance > 0, "no duplicate words");
  report.add("min_distance", infinite || report.actual_min_distance >= cb.min_distance,
             "actual " + actual + " vs claimed " + std::to_string(cb.min_distance));
  report.add("even_distances", !weights_ok || report.all_distances_even,
             "constant-weight words have even pairwise distances");
  return report;
}

}  // namespace ridgebound
