#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace leinartas {

// Exact rational number. GMP keeps every mpq_class produced by arithmetic in
// lowest terms with a positive denominator; values built from raw parts must
// go through make_rational().
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer &num, const Integer &den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// "n" or "n/d" in lowest terms.
inline std::string to_string(const Rational &r) { return r.get_str(); }

} // namespace leinartas
