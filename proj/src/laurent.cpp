#include "s1fp/laurent.hpp"

#include <sstream>

namespace s1fp {

LaurentPoly LaurentPoly::term(const Rational& c, long power) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(power, c);
  return p;
}

Rational LaurentPoly::coeff(long power) const {
  auto it = terms_.find(power);
  return it == terms_.end() ? Rational(0) : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [pow, c] : other.terms_) {
    auto it = terms_.find(pow);
    if (it == terms_.end()) {
      terms_.emplace(pow, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
  LaurentPoly r = *this;
  r += other;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [pow, c] : terms_) r.terms_.emplace(pow, -c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
  return *this + (-other);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  LaurentPoly r;
  for (const auto& [pa, ca] : terms_)
    for (const auto& [pb, cb] : other.terms_)
      r += term(ca * cb, pa + pb);
  return r;
}

LaurentPoly LaurentPoly::scale(const Rational& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [pow, coeff] : terms_) r.terms_.emplace(pow, coeff * c);
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [pow, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.get_str() << "*t^" << pow;
  }
  return out.str();
}

}  // namespace s1fp
