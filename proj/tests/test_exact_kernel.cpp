#include <doctest.h>

#include <random>
#include <vector>

#include "s1fp/laurent.hpp"
#include "s1fp/rational.hpp"
#include "s1fp/symmetric.hpp"

using namespace s1fp;

namespace {

// Independent oracle: expand prod_j (x + xi_j) as a dense coefficient vector
// and read sigma_i off the coefficient of x^{n-i}.
Integer sigma_by_expansion(const std::vector<std::int64_t>& xs, std::size_t i) {
  std::vector<Integer> coeffs = {Integer(1)};  // coeffs[d] multiplies x^d... built high-to-low
  for (std::int64_t x : xs) {
    std::vector<Integer> next(coeffs.size() + 1, Integer(0));
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
      next[d] += coeffs[d];          // times x
      next[d + 1] += coeffs[d] * x;  // times the constant
    }
    coeffs = std::move(next);
  }
  return coeffs[i];
}

// Independent oracle: Newton's identities from power sums.
Integer sigma_by_newton(const std::vector<std::int64_t>& xs, std::size_t k) {
  std::vector<Integer> power(k + 1, Integer(0));
  for (std::size_t j = 1; j <= k; ++j)
    for (std::int64_t x : xs) {
      Integer p;
      Integer base(static_cast<long>(x));
      mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), j);
      power[j] += p;
    }
  std::vector<Integer> e(k + 1, Integer(0));
  e[0] = 1;
  for (std::size_t m = 1; m <= k; ++m) {
    Integer acc = 0;
    for (std::size_t i = 1; i <= m; ++i) {
      Integer term = e[m - i] * power[i];
      if (i % 2 == 0) acc -= term; else acc += term;
    }
    e[m] = acc / static_cast<long>(m);
  }
  return e[k];
}

std::mt19937 rng(20240817);

LaurentPoly random_laurent() {
  std::uniform_int_distribution<int> nterms(0, 4), pow(-5, 5), num(-9, 9), den(1, 9);
  LaurentPoly p;
  int t = nterms(rng);
  for (int i = 0; i < t; ++i)
    p += LaurentPoly::term(make_rational(num(rng), den(rng)), pow(rng));
  return p;
}

}  // namespace

TEST_CASE("rational arithmetic on the documented cases") {
  CHECK(rational_add(make_rational(1, 2), make_rational(-1, 2)) == 0);
  CHECK(rational_add(rational_add(make_rational(1, 2), make_rational(1, 2)),
                     make_rational(-1, 1)) == 0);
  CHECK(rational_mul(make_rational(1, 3), make_rational(3, 1)) == 1);
  CHECK(rational_div(make_rational(1, 2), make_rational(1, 4)) == 2);
  CHECK(rational_sub(make_rational(1, 3), make_rational(1, 3)) == 0);
}

TEST_CASE("rational results are always reduced with positive denominator") {
  Rational q = make_rational(4, -6);
  CHECK(q.get_num() == -2);
  CHECK(q.get_den() == 3);
  CHECK(to_string(make_rational(-3, 9)) == "-1/3");
  CHECK(to_string(make_rational(4, 2)) == "2");
}

TEST_CASE("division by zero is a distinct error") {
  CHECK_THROWS_AS(rational_div(make_rational(1), Rational(0)), DivisionByZero);
  CHECK_THROWS_AS(make_rational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(reciprocal(Integer(0)), DivisionByZero);
}

TEST_CASE("laurent arithmetic on the documented cases") {
  LaurentPoly a = LaurentPoly::term(make_rational(1), -1);
  CHECK((a + LaurentPoly::term(make_rational(-1), -1)).is_zero());

  LaurentPoly prod = LaurentPoly::term(make_rational(2), 0) *
                     LaurentPoly::term(make_rational(1), -2);
  CHECK(prod == LaurentPoly::term(make_rational(2), -2));

  LaurentPoly mixed = LaurentPoly::term(make_rational(1), -2) +
                      LaurentPoly::term(make_rational(-1), -1);
  CHECK(mixed.term_count() == 2);
  CHECK(mixed.coeff(-2) == 1);
  CHECK(mixed.coeff(-1) == -1);
  CHECK(mixed.str() == "1*t^-2 + -1*t^-1");
}

TEST_CASE("laurent zero coefficients are pruned") {
  LaurentPoly p = LaurentPoly::term(Rational(0), 3);
  CHECK(p.is_zero());
  CHECK(p.str() == "0");
  LaurentPoly q = random_laurent();
  CHECK((q - q).is_zero());
  CHECK(q.scale(Rational(0)).is_zero());
}

TEST_CASE("laurent arithmetic is associative and commutative") {
  for (int trial = 0; trial < 300; ++trial) {
    LaurentPoly a = random_laurent(), b = random_laurent(), c = random_laurent();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("elementary symmetric on the documented cases") {
  std::vector<std::int64_t> tw = {1, 1, -2};
  CHECK(elementary_symmetric(tw, 1) == 0);
  CHECK(elementary_symmetric(tw, 3) == -2);  // product oracle 1*1*(-2)
  CHECK(elementary_symmetric(tw, 0) == 1);
  CHECK(elementary_symmetric(std::vector<std::int64_t>{}, 0) == 1);
  CHECK_THROWS_AS(elementary_symmetric(tw, 4), std::out_of_range);
}

TEST_CASE("elementary symmetric matches the polynomial expansion oracle") {
  std::uniform_int_distribution<int> len(0, 8), value(-10, 10);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::int64_t> xs;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
      int v = value(rng);
      xs.push_back(v);
    }
    for (std::size_t i = 0; i <= xs.size(); ++i)
      CHECK(elementary_symmetric(xs, i) == sigma_by_expansion(xs, i));
  }
}

TEST_CASE("elementary symmetric matches Newton's identities") {
  std::uniform_int_distribution<int> len(1, 8), value(-10, 10);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::int64_t> xs;
    int n = len(rng);
    for (int i = 0; i < n; ++i) xs.push_back(value(rng));
    for (std::size_t i = 1; i <= xs.size(); ++i)
      CHECK(elementary_symmetric(xs, i) == sigma_by_newton(xs, i));
  }
}
