#pragma once

#include <stdexcept>
#include <string>

namespace ssfem {

// Bad argument to an operation (out-of-range dimension, non-interior point, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameters that are individually valid but inconsistent together,
// e.g. an over-chopped count or a profile that is not strictly decreasing.
class InvalidConfiguration : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Request outside the supported family (dimension, non-family profile).
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Problem too large for exact dense linear algebra.
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent computations that must agree did not, or an exact solve
// hit a singular matrix.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ssfem
