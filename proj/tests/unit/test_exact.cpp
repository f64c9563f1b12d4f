#include <doctest.h>

#include "dgexcess/exact.hpp"
#include "dgexcess/hp.hpp"
#include "dgexcess/polynomial.hpp"

using namespace dgexcess;

namespace {

RationalPoly poly(std::vector<long> c) {
  std::vector<Rational> q;
  for (long x : c) q.emplace_back(x);
  return RationalPoly(std::move(q));
}

}  // namespace

TEST_CASE("rational strings") {
  CHECK(to_fraction_string(Rational(6)) == "6/1");
  CHECK(to_fraction_string(Rational(-2, 3)) == "-2/3");
  CHECK(to_plain_string(Rational(6)) == "6");
  CHECK(to_plain_string(Rational(8, 9)) == "8/9");
  CHECK(parse_rational("6/1") == 6);
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK(parse_rational("17") == 17);
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  for (const Rational& q : {Rational(0), Rational(5, 7), Rational(-123456789, 1000)})
    CHECK(parse_rational(to_fraction_string(q)) == q);
}

TEST_CASE("decimal digits") {
  CHECK(decimal_digits(Integer(0)) == 1);
  CHECK(decimal_digits(Integer(9)) == 1);
  CHECK(decimal_digits(Integer(-10)) == 2);
  CHECK(decimal_digits(Integer("1000000000000000000000")) == 22);
}

TEST_CASE("high precision reals honour the configured digits") {
  hp::PrecisionScope scope(60);
  const hp::Real two(2);
  const hp::Real r = hp::sqrt(two);
  CHECK(r.digits() >= 60);
  // sqrt(2)^2 - 2 vanishes to the working precision.
  CHECK(hp::abs(r * r - two) < hp::epsilon_digits(55));
  CHECK(r.to_string(5) == "1.4142e+00");
  CHECK(hp::Real::parse("0.125") == hp::Real(Rational(1, 8)));
  const hp::Complex z(hp::Real(3), hp::Real(4));
  CHECK(hp::abs(z) == hp::Real(5));
  CHECK(hp::norm(z) == hp::Real(25));
}

TEST_CASE("quantity comparisons") {
  const Quantity a(Rational(1, 3));
  const Quantity b(Rational(1, 3));
  CHECK(approx_equal(a, b, 0.0));
  const Quantity c(hp::Real(Rational(1, 3)) + hp::epsilon_digits(12));
  CHECK(approx_equal(c, a, 1e-9));
  CHECK_FALSE(approx_equal(c, a, 1e-14));
  CHECK(approx_less_equal(a, Quantity(Rational(1, 2)), 0.0));
  CHECK_FALSE(approx_less_equal(Quantity(Rational(1, 2)), a, 0.0));
  CHECK(a.to_string() == "1/3");
  CHECK_FALSE(c.is_exact());
}

TEST_CASE("polynomial arithmetic") {
  const RationalPoly p = poly({-6, 11, -6, 1});  // (x-1)(x-2)(x-3)
  CHECK(p.degree() == 3);
  CHECK(p(Rational(2)) == 0);
  CHECK(p.derivative() == poly({11, -12, 3}));
  const auto [q, r] = divmod(p, poly({-1, 1}));
  CHECK(q == poly({6, -5, 1}));
  CHECK(r.is_zero_poly());
  const auto [q2, rem] = deflate(p, Rational(4));
  CHECK(rem == 6);
  CHECK(q2 * poly({-4, 1}) + RationalPoly::constant(rem) == p);
  CHECK(gcd(p, poly({-2, 1}) * poly({5, 1})) == poly({-2, 1}));
  CHECK_THROWS_AS(divmod(p, RationalPoly{}), std::domain_error);
}

TEST_CASE("square-free decomposition") {
  // (x-1)^3 (x+2)^2 (x-5)
  const RationalPoly a = poly({-1, 1});
  const RationalPoly b = poly({2, 1});
  const RationalPoly c = poly({-5, 1});
  const RationalPoly p = a * a * a * b * b * c;
  CHECK(squarefree_part(p) == a * b * c);
  const auto f = squarefree_factorization(p);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == c);
  CHECK(f[1] == b);
  CHECK(f[2] == a);
  // A scaled input gives monic factors.
  const auto g = squarefree_factorization(p * Rational(7, 2));
  CHECK(g[2] == a);
}
