#include "ssfem/linalg.hpp"

#include "ssfem/errors.hpp"

namespace ssfem {

namespace {

using IntegerRows = std::vector<std::vector<Integer>>;

// Scales each row by the lcm of its denominators.
IntegerRows clear_denominators(const RationalMatrix& m, std::size_t extra_cols = 0,
                               const RationalMatrix* rhs = nullptr) {
  IntegerRows rows(m.rows(), std::vector<Integer>(m.cols() + extra_cols));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer scale = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < extra_cols; ++j) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), (*rhs)(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      rows[i][j] = m(i, j).get_num() * (scale / m(i, j).get_den());
    }
    for (std::size_t j = 0; j < extra_cols; ++j) {
      const Rational& v = (*rhs)(i, j);
      rows[i][m.cols() + j] = v.get_num() * (scale / v.get_den());
    }
  }
  return rows;
}

// Bareiss elimination restricted to the first `pivot_cols` columns. Returns
// the pivot column of each pivot row; entries are updated in place.
std::vector<std::size_t> bareiss(IntegerRows& rows, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t width = rows.front().size();
  Integer previous = 1;
  Integer tmp;
  std::size_t r = 0;
  for (std::size_t col = 0; col < pivot_cols && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const auto& pivot_row = rows[r];
    const Integer& pivot = pivot_row[col];
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      auto& row = rows[i];
      const Integer factor = row[col];
      for (std::size_t j = col + 1; j < width; ++j) {
        // row[j] = (pivot * row[j] - factor * pivot_row[j]) / previous
        mpz_mul(tmp.get_mpz_t(), factor.get_mpz_t(), pivot_row[j].get_mpz_t());
        mpz_mul(row[j].get_mpz_t(), row[j].get_mpz_t(), pivot.get_mpz_t());
        mpz_sub(row[j].get_mpz_t(), row[j].get_mpz_t(), tmp.get_mpz_t());
        mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), previous.get_mpz_t());
      }
      row[col] = 0;
    }
    previous = pivot;
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

}  // namespace

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::size_t exact_rank(const RationalMatrix& m) {
  IntegerRows rows = clear_denominators(m);
  return bareiss(rows, m.cols()).size();
}

RationalMatrix solve_exact(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw InvalidArgument("solve_exact: matrix is not square");
  if (b.rows() != n) throw InvalidArgument("solve_exact: right-hand side has the wrong height");
  IntegerRows rows = clear_denominators(a, b.cols(), &b);
  auto pivots = bareiss(rows, n);
  if (pivots.size() != n) {
    throw VerificationError("solve_exact: singular matrix (rank " + std::to_string(pivots.size()) +
                            " of " + std::to_string(n) + ")");
  }
  RationalMatrix x(n, b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t ii = n; ii-- > 0;) {
      Rational acc(rows[ii][n + c]);
      for (std::size_t j = ii + 1; j < n; ++j) {
        if (rows[ii][j] != 0) acc -= Rational(rows[ii][j]) * x(j, c);
      }
      acc /= Rational(rows[ii][ii]);
      x(ii, c) = acc;
    }
  }
  return x;
}

}  // namespace ssfem
