#pragma once

#include <stdexcept>
#include <string>

namespace ridgebound {

// Violated precondition of an operation. The message names the failed inequality.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration or allocation would exceed a configured cap.
class CapExceededError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Iterative numerics (quadrature, bisection, rejection sampling) ran out of budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& what) {
  if (!condition) throw PreconditionError(what);
}

}  // namespace ridgebound
