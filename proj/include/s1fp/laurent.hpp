#pragma once

#include <map>
#include <string>

#include "s1fp/rational.hpp"

namespace s1fp {

// Sparse Laurent polynomial in one formal generator t, with exact rational
// coefficients. Zero coefficients are never stored, so two polynomials are
// equal iff their term maps are equal.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }

  /// Single term c*t^power; the zero polynomial when c == 0.
  static LaurentPoly term(const Rational& c, long power);

  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of t^power (zero if absent).
  Rational coeff(long power) const;

  const std::map<long, Rational>& terms() const { return terms_; }

  /// Number of stored (nonzero) terms.
  std::size_t term_count() const { return terms_.size(); }

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly operator+(const LaurentPoly& other) const;
  LaurentPoly operator-() const;
  LaurentPoly operator-(const LaurentPoly& other) const;
  LaurentPoly operator*(const LaurentPoly& other) const;

  /// Scalar multiple.
  LaurentPoly scale(const Rational& c) const;

  bool operator==(const LaurentPoly& other) const { return terms_ == other.terms_; }
  bool operator!=(const LaurentPoly& other) const { return !(*this == other); }

  /// "<coeff>*t^<power>" terms in ascending power joined by " + "; "0" when zero.
  std::string str() const;

 private:
  std::map<long, Rational> terms_;
};

}  // namespace s1fp
