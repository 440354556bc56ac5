#pragma once

#include <cstdint>
#include <string>

#include <Eigen/Core>

#include "ridgebound/rng.hpp"

namespace ridgebound {

// Input distribution P_X: uniform on [-1, 1]^d or standard Gaussian N(0, I_d).
enum class Design { uniform_cube, gaussian };

std::string to_string(Design design);
Design design_from_string(const std::string& name);

// Row `sample` of a design matrix: coordinate j is keyed by (sample, j, trial).
inline void draw_point(Design design, const CounterRng& rng, std::uint32_t sample, std::uint32_t trial,
                       Eigen::Ref<Eigen::VectorXd> out) {
  for (Eigen::Index j = 0; j < out.size(); ++j) {
    const auto col = static_cast<std::uint32_t>(j);
    out[j] = design == Design::uniform_cube ? 2.0 * rng.uniform(sample, col, trial) - 1.0
                                            : rng.normal(sample, col, trial);
  }
}

}  // namespace ridgebound
