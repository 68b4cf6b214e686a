// rational.hpp — numeric ground types: extended-precision real and exact
// rational.
//
// The whole library computes in `real` (long double on x86-64: 64-bit
// mantissa), which keeps enough headroom for the cancellation-prone
// second-derivative differences near x = 1.  Catalog coefficients and
// constants are exact rationals (GMP mpq) so that catalog-level identities
// can be asserted without floating point.
#pragma once

#include <gmpxx.h>

#include <string>

namespace divlat {

using real = long double;

using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Exact-to-1-ulp conversion; catalog rationals have small numerators and
// denominators, each convertible to double without rounding.
inline real to_real(const Rational& q) {
  return static_cast<real>(q.get_num().get_d()) /
         static_cast<real>(q.get_den().get_d());
}

inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace divlat
