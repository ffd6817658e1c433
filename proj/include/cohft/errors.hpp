#pragma once

#include <stdexcept>
#include <string>

namespace cohft {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A (g, n) pair outside the stable range 2g - 2 + n > 0.
struct UnstablePair : Error {
  UnstablePair(int g, int n)
      : Error("unstable pair (g=" + std::to_string(g) + ", n=" + std::to_string(n) + ")") {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

// Bivariate numerator does not vanish on z = -w.
struct NonDivisible : Error {
  explicit NonDivisible(const std::string& what) : Error(what) {}
};

// R(z) R*(-z) != Id through the truncation order.
struct NonSymplectic : Error {
  explicit NonSymplectic(const std::string& what) : Error(what) {}
};

struct SingularPairing : Error {
  SingularPairing() : Error("pairing matrix is singular") {}
};

struct RangeError : Error {
  explicit RangeError(const std::string& what) : Error(what) {}
};

struct SizeMismatch : Error {
  explicit SizeMismatch(const std::string& what) : Error(what) {}
};

// Bad user input (CLI flags, malformed JSON descriptors).
struct ValidationError : Error {
  explicit ValidationError(const std::string& what) : Error(what) {}
};

}  // namespace cohft
