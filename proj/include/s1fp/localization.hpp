#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "s1fp/laurent.hpp"
#include "s1fp/model.hpp"
#include "s1fp/verdict.hpp"

namespace s1fp {

// Monomial c_1^{e_1} * ... * c_n^{e_n} in the Chern classes; exponents are
// indexed by class degree (exponents[i-1] belongs to c_i).
class ChernMonomial {
 public:
  explicit ChernMonomial(std::vector<unsigned> exponents)
      : exponents_(std::move(exponents)) {}

  /// Constant monomial 1 for half-dimension n.
  static ChernMonomial one(std::size_t n) {
    return ChernMonomial(std::vector<unsigned>(n, 0));
  }

  /// Parse "c1^2*c3" (whitespace-insensitive; "1" is the constant monomial).
  /// Class indices must lie in [1, n].
  static ChernMonomial parse(const std::string& text, std::size_t n);

  const std::vector<unsigned>& exponents() const { return exponents_; }
  std::size_t length() const { return exponents_.size(); }

  /// Sum of i*e_i; the cohomological degree of the monomial is twice this.
  std::size_t half_degree() const;

  std::string str() const;

  bool operator==(const ChernMonomial&) const = default;

 private:
  std::vector<unsigned> exponents_;
};

struct MonomialParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Restriction of c_i at p: sigma_i of the weights times t^i.
LaurentPoly chern_restriction(const FixedPoint& p, std::size_t i);

/// Equivariant Euler class at p: (product of weights) * t^n. Never zero.
LaurentPoly euler_class(const FixedPoint& p);

/// Value of the monomial at p with t struck out: prod_i sigma_i(weights)^{e_i}.
Integer monomial_value(const FixedPoint& p, const ChernMonomial& mono);

/// Localization sum over the fixed points:
///   sum_p monomial_value(p) / Lambda_p * t^{half_degree - n}.
LaurentPoly abbv_integral(const FixedPointData& data, const ChernMonomial& mono);

/// For deg(mono) < 2n the integral must vanish; pass/fail accordingly.
/// Monomials of degree >= 2n are not covered and report not-applicable.
CheckResult degree_vanishing_check(const FixedPointData& data, const ChernMonomial& mono);

/// All exponent vectors of length n with half_degree == m, in lexicographic
/// order (helper for degree batteries and integrality advisories).
std::vector<ChernMonomial> monomials_of_half_degree(std::size_t n, std::size_t m);

}  // namespace s1fp
