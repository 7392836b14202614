#pragma once

#include <gmpxx.h>

#include <string>

namespace ssfem {

using Integer = mpz_class;
using Rational = mpq_class;

// Nonnegative arbitrary-precision count of indices or degrees of freedom.
using Count = mpz_class;

inline std::string to_string(const Integer& v) { return v.get_str(); }

// "p/q", or "p" when q == 1.
inline std::string to_string(const Rational& v) { return v.get_str(); }

Rational parse_rational(const std::string& text);
Integer parse_integer(const std::string& text);

inline Rational abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }

}  // namespace ssfem
