#include "ssfem/combinatorics.hpp"

#include <string>

#include "ssfem/errors.hpp"

namespace ssfem {

Rational parse_rational(const std::string& text) {
  Rational value;
  if (text.empty() || value.set_str(text, 10) != 0) {
    throw InvalidArgument("not a rational number: '" + text + "'");
  }
  if (value.get_den() == 0) throw InvalidArgument("zero denominator: '" + text + "'");
  value.canonicalize();
  return value;
}

Integer parse_integer(const std::string& text) {
  Integer value;
  if (text.empty() || value.set_str(text, 10) != 0) {
    throw InvalidArgument("not an integer: '" + text + "'");
  }
  return value;
}

Count binomial(int m, int n) {
  if (m < 0 || n < 0 || n > m) {
    throw InvalidArgument("binomial(" + std::to_string(m) + ", " + std::to_string(n) +
                          "): need 0 <= n <= m");
  }
  Count result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(n));
  return result;
}

Count poly_dim(int n, int k) {
  if (n < 1 || k < 0) {
    throw InvalidArgument("poly_dim(" + std::to_string(n) + ", " + std::to_string(k) +
                          "): need n >= 1 and k >= 0");
  }
  return binomial(k + n, n);
}

Count hockey_stick_a(int n, int k) {
  if (n < 0 || k < 0) throw InvalidArgument("hockey_stick_a: arguments must be nonnegative");
  Count sum = 0;
  for (int i = 0; i <= k; ++i) sum += binomial(n + i, i);
  return sum;
}

Count hockey_stick_b(int n, int k) {
  if (n < 0 || k < 0) throw InvalidArgument("hockey_stick_b: arguments must be nonnegative");
  Count sum = 0;
  for (int i = 0; i <= k; ++i) sum += binomial(n + i, n);
  return sum;
}

Count chopped_count(int face_dim, int degree, std::optional<int> corner_degree) {
  if (face_dim < 0 || degree < 0 || (corner_degree && *corner_degree < 0)) {
    throw InvalidArgument("chopped_count: arguments must be nonnegative");
  }
  Count whole = binomial(degree + face_dim, face_dim);
  if (!corner_degree) return whole;
  Count result = whole - Count(face_dim + 1) * binomial(*corner_degree + face_dim, face_dim);
  if (result < 0) {
    throw InvalidConfiguration("chopped_count: corners of degree " +
                               std::to_string(*corner_degree) + " exceed P_" +
                               std::to_string(degree) + " on a " + std::to_string(face_dim) +
                               "-simplex");
  }
  return result;
}

}  // namespace ssfem
