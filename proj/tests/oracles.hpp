#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Core>

namespace oracle {

// Pascal's triangle, no multiplicative shortcuts.
inline unsigned __int128 binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<unsigned __int128> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j >= 1; --j) row[j] += row[j - 1];
  return row[k];
}

// Integer ceil(sqrt(x)) by linear search from the floating estimate.
inline std::uint64_t ceil_sqrt(unsigned __int128 x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r >= x) --r;
  while (static_cast<unsigned __int128>(r) * r < x) ++r;
  return r;
}

// Every point of {-v0..v0}^d with l1 norm <= v0, by an odometer over the full box.
inline std::vector<std::vector<int>> l1_ball(int d, int v0) {
  std::vector<std::vector<int>> out;
  std::vector<int> x(static_cast<std::size_t>(d), -v0);
  while (true) {
    int norm = 0;
    for (int c : x) norm += std::abs(c);
    if (norm <= v0) out.push_back(x);
    int k = 0;
    while (k < d && x[static_cast<std::size_t>(k)] == v0) x[static_cast<std::size_t>(k++)] = -v0;
    if (k == d) break;
    ++x[static_cast<std::size_t>(k)];
  }
  return out;
}

inline bool first_nonzero_positive(const std::vector<int>& x) {
  for (int c : x)
    if (c != 0) return c > 0;
  return false;
}

inline double normal_pdf(double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi); }

// Two-sided Gaussian tail moments E[Z^k 1{|Z| > zeta}] for k = 0, 2, 4.
inline double tail_m0(double zeta) { return std::erfc(zeta / std::numbers::sqrt2); }
inline double tail_m2(double zeta) { return 2.0 * zeta * normal_pdf(zeta) + tail_m0(zeta); }
inline double tail_m4(double zeta) { return 2.0 * zeta * zeta * zeta * normal_pdf(zeta) + 3.0 * tail_m2(zeta); }

// (k-1)!! for even k, the k-th moment of N(0, 1); 0 for odd k.
inline double gaussian_moment(int k) {
  if (k % 2) return 0.0;
  double m = 1.0;
  for (int j = k - 1; j > 1; j -= 2) m *= j;
  return m;
}

// Dense w' G w.
inline double quadratic_form(const Eigen::MatrixXd& G, const Eigen::VectorXd& w) { return w.dot(G * w); }

struct McResult {
  double mean;
  double std_error;
};

// Plain mt19937_64 Monte Carlo of h(X), X uniform on [-1, 1]^d or N(0, I_d).
template <class H>
McResult mc_mean(H&& h, int d, std::size_t n, bool gaussian, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::normal_distribution<double> norm(0.0, 1.0);
  Eigen::VectorXd x(d);
  double s = 0.0, ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) x[j] = gaussian ? norm(gen) : unif(gen);
    const double v = h(x);
    s += v;
    ss += v * v;
  }
  const double nn = static_cast<double>(n);
  const double mean = s / nn;
  return {mean, std::sqrt(std::max(0.0, (ss / nn - mean * mean) / (nn - 1.0)))};
}

// Composite midpoint rule; used only on smooth integrands.
template <class F>
double midpoint(F&& f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double s = 0.0;
  for (int i = 0; i < panels; ++i) s += f(a + (i + 0.5) * h);
  return s * h;
}

}  // namespace oracle
