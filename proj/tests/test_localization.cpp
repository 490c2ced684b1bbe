#include <doctest.h>

#include <random>

#include "s1fp/localization.hpp"

using namespace s1fp;

namespace {

FixedPointData reference_two_point() {
  return FixedPointData(3, {{"p", WeightMultiset({1, 1, -2})},
                            {"q", WeightMultiset({-1, -1, 2})}});
}

FixedPointData cp2() {
  return FixedPointData(2, {{"p0", WeightMultiset({1, 2})},
                            {"p1", WeightMultiset({-1, 1})},
                            {"p2", WeightMultiset({-2, -1})}});
}

FixedPointData s2() {
  return FixedPointData(1, {{"p", WeightMultiset({1})}, {"q", WeightMultiset({-1})}});
}

std::mt19937 rng(77110);

FixedPointData sample_data() {
  std::uniform_int_distribution<std::size_t> ndist(1, 4), kdist(1, 4);
  std::uniform_int_distribution<std::int64_t> wdist(1, 12);
  std::size_t n = ndist(rng), k = kdist(rng);
  std::vector<FixedPoint> points;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::int64_t> weights;
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t v = wdist(rng);
      weights.push_back(v <= 6 ? -v : v - 6);
    }
    points.push_back({"p" + std::to_string(i), WeightMultiset(std::move(weights))});
  }
  return FixedPointData(n, std::move(points));
}

}  // namespace

TEST_CASE("chern restriction at a point") {
  FixedPoint p{"p", WeightMultiset({1, 1, -2})};
  CHECK(chern_restriction(p, 1).is_zero());
  CHECK(chern_restriction(p, 3) == LaurentPoly::term(make_rational(-2), 3));
  FixedPoint r{"r", WeightMultiset({1, 2})};
  CHECK(chern_restriction(r, 2) == LaurentPoly::term(make_rational(2), 2));
  CHECK_THROWS_AS(chern_restriction(p, 0), std::out_of_range);
  CHECK_THROWS_AS(chern_restriction(p, 4), std::out_of_range);
}

TEST_CASE("euler class at a point") {
  CHECK(euler_class({"p", WeightMultiset({1, 1, -2})}) ==
        LaurentPoly::term(make_rational(-2), 3));
  CHECK(euler_class({"p", WeightMultiset({1})}) == LaurentPoly::term(make_rational(1), 1));
  CHECK(euler_class({"p", WeightMultiset({-1, -1, 2})}) ==
        LaurentPoly::term(make_rational(2), 3));
}

TEST_CASE("abbv integral on the documented cases") {
  // Two-point cancellation on the sphere.
  CHECK(abbv_integral(s2(), ChernMonomial::one(1)).is_zero());

  // The c3 computation on the reference two-point candidate.
  CHECK(abbv_integral(reference_two_point(), ChernMonomial({0, 0, 1})) ==
        LaurentPoly::term(make_rational(2), 0));

  // c1^2 over the projective plane data, against a direct brute-force sum.
  FixedPointData plane = cp2();
  Rational brute(0);
  for (const FixedPoint& p : plane.points()) {
    Rational c1(chern_one(p));
    brute += rational_div(c1 * c1, Rational(weight_product(p)));
  }
  CHECK(brute == 9);
  CHECK(abbv_integral(plane, ChernMonomial({2, 0})) == LaurentPoly::term(brute, 0));
}

TEST_CASE("degree vanishing check") {
  CHECK(degree_vanishing_check(s2(), ChernMonomial::one(1)).verdict == Verdict::Pass);

  FixedPointData bad(1, {{"p", WeightMultiset({1})}, {"q", WeightMultiset({-2})}});
  CheckResult r = degree_vanishing_check(bad, ChernMonomial::one(1));
  CHECK(r.verdict == Verdict::Fail);
  CHECK(abbv_integral(bad, ChernMonomial::one(1)) ==
        LaurentPoly::term(make_rational(1, 2), -1));

  CHECK(degree_vanishing_check(reference_two_point(), ChernMonomial({0, 0, 1})).verdict ==
        Verdict::NotApplicable);
}

TEST_CASE("homogeneity: integrals live in a single power of t") {
  for (int trial = 0; trial < 400; ++trial) {
    FixedPointData data = sample_data();
    std::size_t n = data.half_dim();
    for (std::size_t m = 0; m <= n + 1; ++m) {
      for (const ChernMonomial& mono : monomials_of_half_degree(n, m)) {
        LaurentPoly value = abbv_integral(data, mono);
        if (value.is_zero()) continue;
        CHECK(value.term_count() == 1);
        CHECK(value.terms().begin()->first ==
              static_cast<long>(m) - static_cast<long>(n));
      }
    }
  }
}

TEST_CASE("top chern restriction equals the euler class") {
  for (int trial = 0; trial < 200; ++trial) {
    FixedPointData data = sample_data();
    for (const FixedPoint& p : data.points())
      CHECK(chern_restriction(p, data.half_dim()) == euler_class(p));
  }
}

TEST_CASE("euler-class identity: integral of c_n counts the fixed points") {
  for (int trial = 0; trial < 200; ++trial) {
    FixedPointData data = sample_data();
    std::vector<unsigned> exps(data.half_dim(), 0);
    exps.back() = 1;
    CHECK(abbv_integral(data, ChernMonomial(std::move(exps))) ==
          LaurentPoly::term(Rational(static_cast<long>(data.point_count())), 0));
  }
}

TEST_CASE("linearity over rational combinations") {
  for (int trial = 0; trial < 100; ++trial) {
    FixedPointData data = sample_data();
    std::size_t n = data.half_dim();
    auto monos = monomials_of_half_degree(n, std::min<std::size_t>(n, 2));
    if (monos.size() < 2) continue;
    Rational c1 = make_rational(3, 7), c2 = make_rational(-5, 2);
    LaurentPoly combined = abbv_integral(data, monos[0]).scale(c1) +
                           abbv_integral(data, monos[1]).scale(c2);
    // Same combination assembled point by point.
    LaurentPoly direct;
    long power = static_cast<long>(monos[0].half_degree()) - static_cast<long>(n);
    for (const FixedPoint& p : data.points()) {
      Rational v = c1 * Rational(monomial_value(p, monos[0])) +
                   c2 * Rational(monomial_value(p, monos[1]));
      direct += LaurentPoly::term(rational_div(v, Rational(weight_product(p))), power);
    }
    CHECK(combined == direct);
  }
}

TEST_CASE("chern monomial text syntax") {
  CHECK(ChernMonomial::parse("c1^2*c3", 3) == ChernMonomial({2, 0, 1}));
  CHECK(ChernMonomial::parse(" c1 ^ 2 * c3 ", 3) == ChernMonomial({2, 0, 1}));
  CHECK(ChernMonomial::parse("1", 2) == ChernMonomial::one(2));
  CHECK(ChernMonomial::parse("c2", 4) == ChernMonomial({0, 1, 0, 0}));
  CHECK(ChernMonomial::parse("c1*c1", 2) == ChernMonomial({2, 0}));
  CHECK(ChernMonomial({2, 0, 1}).str() == "c1^2*c3");
  CHECK(ChernMonomial::one(3).str() == "1");
  CHECK_THROWS_AS(ChernMonomial::parse("c4", 3), MonomialParseError);
  CHECK_THROWS_AS(ChernMonomial::parse("c1^", 3), MonomialParseError);
  CHECK_THROWS_AS(ChernMonomial::parse("x2", 3), MonomialParseError);
  CHECK_THROWS_AS(ChernMonomial::parse("c1*", 3), MonomialParseError);
  CHECK_THROWS_AS(ChernMonomial::parse("", 3), MonomialParseError);
}
