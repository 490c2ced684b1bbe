#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace s1fp {

// Exact rational scalar. Backed by GMP; always stored reduced with a
// positive denominator, so operator== is structural equality.
using Rational = mpq_class;
using Integer = mpz_class;

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero();
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

inline Rational rational_add(const Rational& a, const Rational& b) { return a + b; }
inline Rational rational_sub(const Rational& a, const Rational& b) { return a - b; }
inline Rational rational_mul(const Rational& a, const Rational& b) { return a * b; }

inline Rational rational_div(const Rational& a, const Rational& b) {
  if (b == 0) throw DivisionByZero();
  return a / b;
}

/// Reciprocal of a nonzero integer, as a reduced rational.
inline Rational reciprocal(const Integer& x) {
  return make_rational(Integer(1), x);
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Renders "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace s1fp
