#include <doctest.h>

#include <cmath>

#include "../oracles.hpp"
#include "corpus.hpp"
#include "dgexcess/generators.hpp"
#include "dgexcess/linalg.hpp"

using namespace dgexcess;

namespace {

std::vector<Rational> coeffs_of(const RationalPoly& p) { return p.coeffs(); }

RationalPoly from_roots(const std::vector<std::pair<long, int>>& roots) {
  RationalPoly p = RationalPoly::constant(Rational(1));
  for (auto [r, mult] : roots)
    for (int i = 0; i < mult; ++i) p = p * RationalPoly::linear_factor(Rational(r));
  return p;
}

}  // namespace

TEST_CASE("trace inner product") {
  const IntMatrix a = complete(3).adjacency();
  CHECK(trace_inner_product(a, a) == 2);
  CHECK(trace_inner_product(IntMatrix::identity(3), a) == 0);
  CHECK_THROWS_AS(trace_inner_product(IntMatrix(2, 2), IntMatrix(3, 3)), std::invalid_argument);
}

TEST_CASE("normality agrees with A A^T = A^T A on every digraph up to 4 vertices") {
  EnumerationOptions all;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Digraph& g : enumerate_digraphs(n, all)) CHECK(normality_test(g) == oracle::normal(g));
  }
}

TEST_CASE("Krylov elimination matches matrix-level Gram-Schmidt") {
  auto corpus = strongly_connected_corpus(4);
  corpus.push_back(petersen());
  corpus.push_back(hypercube(3));
  corpus.push_back(paley_tournament(7));
  for (const Digraph& g : corpus) {
    PowerCache cache(g);
    const KrylovGram kg = krylov_gram_elimination(cache);
    const oracle::Gram o = oracle::gram_schmidt(g);
    REQUIRE(kg.basis.size() == o.monic.size());
    bool same = kg.norms2 == o.norms2 && coeffs_of(kg.minimal) == o.minimal;
    for (std::size_t k = 0; k < o.monic.size(); ++k) same = same && coeffs_of(kg.basis[k]) == o.monic[k];
    CHECK(same);
    // The minimal polynomial annihilates A.
    const ExactMatrix m = evaluate(kg.minimal, cache);
    CHECK(m == ExactMatrix(g.order(), g.order()));
  }
}

TEST_CASE("power traces and caches agree") {
  const Digraph g = paley_tournament(11);
  PowerCache cache(g);
  const auto rolled = power_traces(g, 20);
  const auto cached = power_traces(cache, 20);
  CHECK(rolled == cached);
  CHECK(rolled[0] == 11);
  CHECK(rolled[1] == 0);
  CHECK(rolled[3] == cache.power(3).trace());
  CHECK(cache.gram(1, 1) == 5);
  CHECK(cache.magnitude_digits(0) == 1);
}

TEST_CASE("characteristic polynomials") {
  const Digraph k4g = complete(4);
  const Digraph petg = petersen();
  const Digraph c5g = directed_cycle(5);
  PowerCache k4(k4g);
  CHECK(characteristic_polynomial(k4) == from_roots({{3, 1}, {-1, 3}}));
  PowerCache pet(petg);
  CHECK(characteristic_polynomial(pet) == from_roots({{3, 1}, {1, 5}, {-2, 4}}));
  PowerCache c5(c5g);
  CHECK(characteristic_polynomial(c5) == RationalPoly({-1, 0, 0, 0, 0, 1}));
  // Cayley-Hamilton and divisibility by the minimal polynomial on a corpus.
  for (const Digraph& g : strongly_connected_corpus(4)) {
    PowerCache cache(g);
    const RationalPoly chi = characteristic_polynomial(cache);
    CHECK(chi.degree() == static_cast<long>(g.order()));
    CHECK(evaluate(chi, cache) == ExactMatrix(g.order(), g.order()));
    CHECK(divmod(chi, minimal_polynomial(g)).second.is_zero_poly());
  }
}

TEST_CASE("distinct eigenvalue index") {
  CHECK(distinct_eigenvalue_index(minimal_polynomial(petersen())) == 2);
  CHECK(distinct_eigenvalue_index(minimal_polynomial(directed_cycle(6))) == 5);
  // Non-diagonalizable: a repeated root in m is counted once.
  CHECK(distinct_eigenvalue_index(RationalPoly({0, 0, 1})) == 0);
}

TEST_CASE("working digits grow with entry size") {
  const Digraph c4 = directed_cycle(4);
  const Digraph k12 = complete(12);
  PowerCache small(c4);
  PowerCache big(k12);
  CHECK(working_digits(small, 3) >= hp::configured_digits());
  CHECK(working_digits(big, 1) >= working_digits(small, 1));
}
