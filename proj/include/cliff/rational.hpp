#pragma once

#include <gmpxx.h>

#include <string>

namespace cliff {

/// Exact rational coefficient. GMP keeps results of arithmetic canonical
/// (reduced, positive denominator); values built by hand from a numerator and
/// denominator must go through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// `p/q`, or `p` when the denominator is one.
inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace cliff
