#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dgexcess/generators.hpp"
#include "dgexcess/linalg.hpp"

using namespace dgexcess;

TEST_CASE("Petersen spectrum is 3, 1^5, -2^4 with exact Perron value") {
  const Spectrum s = spectrum(petersen());
  REQUIRE(s.distinct.size() == 3);
  CHECK(s.d() == 2);
  CHECK(s.lambda0.exact == Integer(3));
  CHECK(s.distinct[0].multiplicity == 1);
  CHECK(s.distinct[1].value.re.to_double() == doctest::Approx(1.0));
  CHECK(s.distinct[1].multiplicity == 5);
  CHECK(s.distinct[2].value.re.to_double() == doctest::Approx(-2.0));
  CHECK(s.distinct[2].multiplicity == 4);
  CHECK(s.clustered_count == 3);
  CHECK(s.pi0().re.to_double() == doctest::Approx(10.0));
  CHECK(exact_pi0(minimal_polynomial(petersen()), s.lambda0) == Rational(10));
}

TEST_CASE("directed cycle spectrum is the roots of unity") {
  const std::size_t n = 7;
  const Spectrum s = spectrum(directed_cycle(n));
  REQUIRE(s.distinct.size() == n);
  CHECK(s.lambda0.exact == Integer(1));
  CHECK(s.conjugate_closed(hp::epsilon_digits(30)));
  for (const auto& e : s.distinct) {
    CHECK(e.multiplicity == 1);
    CHECK(hp::abs(hp::abs(e.value) - hp::Real(1)) < hp::epsilon_digits(40));
  }
  // Ordering: Perron value first, then decreasing real part.
  for (std::size_t i = 2; i < s.distinct.size(); ++i) CHECK(s.distinct[i - 1].value.re >= s.distinct[i].value.re);
  // prod (1 - w^j) over j = 1..n-1 is n.
  CHECK(s.pi0().re.to_double() == doctest::Approx(static_cast<double>(n)));
  CHECK(std::abs(s.pi0().im.to_double()) < 1e-30);
}

TEST_CASE("irrational Perron value of P_3") {
  const Spectrum s = spectrum(path(3));
  CHECK_FALSE(s.lambda0.exact.has_value());
  const hp::Real err = hp::abs(s.lambda0.value - hp::sqrt(hp::Real(2)));
  CHECK(err < hp::epsilon_digits(45));
  CHECK(exact_pi0(minimal_polynomial(path(3)), s.lambda0) == std::nullopt);
  const HoffmanIngredients h = hoffman_ingredients(minimal_polynomial(path(3)), s.lambda0);
  CHECK_FALSE(h.is_exact());
  // S(x) = x (x + sqrt 2); S(sqrt 2) = 4.
  CHECK(h.s_at_lambda0.to_double() == doctest::Approx(4.0));
}

TEST_CASE("precision follows the scope") {
  hp::PrecisionScope scope(80);
  const Spectrum s = spectrum(path(4));
  CHECK(s.digits >= 80);
  // Largest eigenvalue of P_4 is 2 cos(pi/5), the golden ratio.
  const hp::Real phi = (hp::Real(1) + hp::sqrt(hp::Real(5))) / hp::Real(2);
  CHECK(hp::abs(s.lambda0.value - phi) < hp::epsilon_digits(75));
}

TEST_CASE("non-normal digraph with a repeated eigenvalue") {
  // 3-cycle with a chord: not normal.
  const Digraph g(3, {{0, 1}, {1, 2}, {2, 0}, {0, 2}});
  CHECK_FALSE(normality_test(g));
  const Spectrum s = spectrum(g);
  CHECK(s.d_informational);
  std::size_t total = 0;
  for (const auto& e : s.distinct) total += e.multiplicity;
  CHECK(total == 3);
  CHECK(s.lambda0.value > hp::Real(1));
}

TEST_CASE("hoffman ingredients reject a non-root") {
  PerronValue bogus{hp::Real(5), Integer(5)};
  CHECK_THROWS_AS(hoffman_ingredients(minimal_polynomial(petersen()), bogus), SpectrumError);
}
