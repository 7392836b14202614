#pragma once

#include <cstddef>
#include <vector>

#include "ssfem/numeric.hpp"

namespace ssfem {

// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank over Q. Rows are cleared of denominators and reduced by one-step
/// fraction-free (Bareiss) elimination; the pivot is the first nonzero entry
/// at or below the current row.
std::size_t exact_rank(const RationalMatrix& m);

/// Solves A X = B for square nonsingular A. Throws VerificationError if A is
/// singular.
RationalMatrix solve_exact(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace ssfem
