#include "s1fp/localization.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "s1fp/symmetric.hpp"

namespace s1fp {

std::size_t ChernMonomial::half_degree() const {
  std::size_t d = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) d += (i + 1) * exponents_[i];
  return d;
}

std::string ChernMonomial::str() const {
  std::ostringstream out;
  bool any = false;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (any) out << '*';
    any = true;
    out << 'c' << (i + 1);
    if (exponents_[i] > 1) out << '^' << exponents_[i];
  }
  return any ? out.str() : "1";
}

ChernMonomial ChernMonomial::parse(const std::string& text, std::size_t n) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw MonomialParseError("empty Chern monomial");

  std::vector<unsigned> exps(n, 0);
  if (s == "1") return ChernMonomial(std::move(exps));

  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != 'c')
      throw MonomialParseError("expected 'c' at position " + std::to_string(pos) +
                               " in '" + s + "'");
    ++pos;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw MonomialParseError("missing class index after 'c' in '" + s + "'");
    unsigned long idx = std::stoul(s.substr(start, pos - start));
    if (idx < 1 || idx > n)
      throw MonomialParseError("class index c" + std::to_string(idx) +
                               " out of range [1," + std::to_string(n) + "]");
    unsigned long exp = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == start) throw MonomialParseError("missing exponent after '^' in '" + s + "'");
      exp = std::stoul(s.substr(start, pos - start));
    }
    exps[idx - 1] += static_cast<unsigned>(exp);
    if (pos < s.size()) {
      if (s[pos] != '*')
        throw MonomialParseError("expected '*' between factors in '" + s + "'");
      ++pos;
      if (pos == s.size()) throw MonomialParseError("trailing '*' in '" + s + "'");
    }
  }
  return ChernMonomial(std::move(exps));
}

LaurentPoly chern_restriction(const FixedPoint& p, std::size_t i) {
  if (i < 1 || i > p.weights.size())
    throw std::out_of_range("chern_restriction: class index out of range");
  Integer sigma = elementary_symmetric(p.weights.values(), i);
  return LaurentPoly::term(Rational(sigma), static_cast<long>(i));
}

LaurentPoly euler_class(const FixedPoint& p) {
  return LaurentPoly::term(Rational(weight_product(p)),
                           static_cast<long>(p.weights.size()));
}

Integer monomial_value(const FixedPoint& p, const ChernMonomial& mono) {
  std::vector<Integer> sigma = elementary_symmetric_all(p.weights.values());
  Integer value = 1;
  const auto& exps = mono.exponents();
  for (std::size_t i = 0; i < exps.size(); ++i) {
    for (unsigned e = 0; e < exps[i]; ++e) value *= sigma[i + 1];
  }
  return value;
}

LaurentPoly abbv_integral(const FixedPointData& data, const ChernMonomial& mono) {
  if (mono.length() != data.half_dim())
    throw ValidationError("monomial length does not match half_dim");
  const long power =
      static_cast<long>(mono.half_degree()) - static_cast<long>(data.half_dim());
  LaurentPoly total;
  for (const FixedPoint& p : data.points()) {
    Rational contrib = make_rational(monomial_value(p, mono), weight_product(p));
    total += LaurentPoly::term(contrib, power);
  }
  return total;
}

CheckResult degree_vanishing_check(const FixedPointData& data, const ChernMonomial& mono) {
  if (mono.half_degree() >= data.half_dim())
    return {Verdict::NotApplicable, "deg(" + mono.str() + ") >= dim M"};
  LaurentPoly value = abbv_integral(data, mono);
  if (value.is_zero()) return {Verdict::Pass, "integral of " + mono.str() + " = 0"};
  return {Verdict::Fail, "integral of " + mono.str() + " = " + value.str() + " != 0"};
}

namespace {
void monomials_rec(std::size_t n, std::size_t i, std::size_t remaining,
                   std::vector<unsigned>& current, std::vector<ChernMonomial>& out) {
  if (i > n) {
    if (remaining == 0) out.push_back(ChernMonomial(current));
    return;
  }
  for (std::size_t e = 0; e * i <= remaining; ++e) {
    current[i - 1] = static_cast<unsigned>(e);
    monomials_rec(n, i + 1, remaining - e * i, current, out);
  }
  current[i - 1] = 0;
}
}  // namespace

std::vector<ChernMonomial> monomials_of_half_degree(std::size_t n, std::size_t m) {
  std::vector<ChernMonomial> out;
  std::vector<unsigned> current(n, 0);
  monomials_rec(n, 1, m, current, out);
  return out;
}

}  // namespace s1fp
