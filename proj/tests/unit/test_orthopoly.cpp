#include <doctest.h>

#include "../oracles.hpp"
#include "corpus.hpp"
#include "dgexcess/generators.hpp"
#include "dgexcess/linalg.hpp"
#include "dgexcess/orthopoly.hpp"

using namespace dgexcess;

namespace {

hp::Real max_abs_diff(const RealPoly& a, const RationalPoly& b) {
  hp::Real worst(0);
  const std::size_t len = std::max(a.coeffs().size(), b.coeffs().size());
  for (std::size_t i = 0; i < len; ++i) {
    const hp::Real d = hp::abs(a.coeff(i) - hp::Real(b.coeff(i)));
    if (d > worst) worst = d;
  }
  return worst;
}

}  // namespace

TEST_CASE("pre-distance polynomials of Q_3") {
  const PredistanceBasis b = predistance_polynomials(hypercube(3));
  REQUIRE(b.d_hat() == 3);
  CHECK(b.monic[2] == RationalPoly({-3, 0, 1}));
  CHECK(b.monic[3] == RationalPoly({0, -7, 0, 1}));
  CHECK(b.norms2 == std::vector<Rational>{1, 3, 12, 36});
  // c_k^2 = delta_k / eps_k with delta = 1, 3, 3, 1.
  CHECK(b.scale2 == std::vector<Rational>{1, 1, Rational(1, 4), Rational(1, 36)});
  CHECK(b.q_norm2(3) == 52);
  CHECK(b.q_partial[1] == RationalPoly({1, 1}));
}

TEST_CASE("basis is orthogonal with the oracle norms on the corpus") {
  for (const Digraph& g : strongly_connected_corpus(4)) {
    const PredistanceBasis b = predistance_polynomials(g);
    const oracle::Gram o = oracle::gram_schmidt(g);
    CHECK(b.norms2 == o.norms2);
    PowerCache cache(g);
    bool orthogonal = true;
    for (std::size_t i = 0; i < b.monic.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) orthogonal = orthogonal && poly_inner_product(cache, b.monic[i], b.monic[j]) == 0;
    CHECK(orthogonal);
    Rational sum = 0;
    for (std::size_t k = 0; k <= b.d_hat(); ++k) {
      sum += b.norms2[k];
      CHECK(b.q_norm2(k) == sum);
    }
  }
}

TEST_CASE("disconnected input is rejected") {
  CHECK_THROWS_AS(predistance_polynomials(Digraph(2, {{0, 1}})), DigraphError);
}

TEST_CASE("spectral route reproduces the exact basis on normal digraphs") {
  for (const Digraph& g : {petersen(), directed_cycle(5), paley_tournament(7), circulant(8, {1, 2, 5}), path(2)}) {
    const PredistanceBasis exact = predistance_polynomials(g);
    const NumericPredistance num = spectral_predistance(spectrum(g));
    REQUIRE(num.monic.size() == exact.monic.size());
    for (std::size_t k = 0; k < num.monic.size(); ++k) {
      CHECK(max_abs_diff(num.monic[k], exact.monic[k]) < hp::epsilon_digits(20));
      CHECK(hp::abs(num.norms2[k] - hp::Real(exact.norms2[k])) < hp::epsilon_digits(20));
    }
  }
}

TEST_CASE("conjugation polynomial") {
  // Real spectrum: f is x.
  const ComplexPoly f = conjugation_polynomial(spectrum(petersen()));
  CHECK(f.degree() == 1);
  // Directed cycle: f(A) = A^T = A^(n-1).
  const Digraph c = directed_cycle(5);
  const Spectrum s = spectrum(c);
  const ComplexPoly h = conjugation_polynomial(s);
  PowerCache cache(c);
  const ComplexMatrix fa = evaluate(h, cache);
  const IntMatrix at = c.adjacency().transpose();
  hp::Real worst(0);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      const hp::Real e = hp::abs(fa(i, j) - hp::Complex(hp::Real(at(i, j))));
      if (e > worst) worst = e;
    }
  }
  CHECK(worst < hp::epsilon_digits(30));
}

TEST_CASE("Hoffman polynomial gives J on regular strongly connected digraphs") {
  for (const Digraph& g : {petersen(), complete(4), directed_cycle(6), paley_tournament(11)}) {
    const Spectrum s = spectrum(g);
    const HoffmanPolynomial h = hoffman_polynomial(minimal_polynomial(g), s.lambda0, g.order());
    REQUIRE(h.is_exact());
    PowerCache cache(g);
    const HoffmanMatrix hm = hoffman_matrix(h, cache);
    REQUIRE(hm.is_exact());
    CHECK(*hm.exact == ExactMatrix(g.order(), g.order(), Rational(1)));
    CHECK((*h.exact)(Rational(*s.lambda0.exact)) == static_cast<long>(g.order()));
  }
}

TEST_CASE("Hoffman polynomial of P_3 is numeric") {
  const Digraph g = path(3);
  const Spectrum s = spectrum(g);
  const HoffmanPolynomial h = hoffman_polynomial(minimal_polynomial(g), s.lambda0, 3);
  CHECK_FALSE(h.is_exact());
  // H(lambda0) = n.
  const hp::Real at = h.numeric.evaluate(s.lambda0.value, [](const hp::Real& c) { return c; });
  CHECK(hp::abs(at - hp::Real(3)) < hp::epsilon_digits(40));
  PowerCache cache(g);
  const HoffmanMatrix hm = hoffman_matrix(h, cache);
  // H(A) is the rank-one Perron projector scaled by n: entries are positive
  // and the middle diagonal entry is 3/2.
  CHECK(hm.at(1, 1).numeric.to_double() == doctest::Approx(1.5));
  CHECK(hm.at(0, 2).numeric.to_double() == doctest::Approx(0.75));
}
