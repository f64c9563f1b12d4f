#include <doctest.h>

#include "../oracles.hpp"
#include "corpus.hpp"
#include "dgexcess/analysis.hpp"
#include "dgexcess/classify.hpp"
#include "dgexcess/excess.hpp"
#include "dgexcess/generators.hpp"

using namespace dgexcess;

TEST_CASE("named excess values against the brute-force oracle") {
  struct Case {
    Digraph g;
    Rational simple;
    Rational spectral;
  };
  std::vector<Case> cases = {{path(3), Rational(2, 3), Rational(8, 9)},
                             {petersen(), 6, 6},
                             {complete(4), 3, 3},
                             {hypercube(3), 36, 36}};
  for (std::size_t n = 3; n <= 12; ++n) cases.push_back({directed_cycle(n), 1, 1});
  for (const Case& c : cases) {
    const auto [os, osp] = oracle::excesses(c.g);
    CHECK(os == c.simple);
    CHECK(osp == c.spectral);
    Analysis a(c.g);
    CHECK(a.simple_excess() == c.simple);
    CHECK(a.spectral_excess() == c.spectral);
  }
}

TEST_CASE("excesses agree with the oracle on normal members of the corpus") {
  for (const Digraph& g : strongly_connected_corpus(4)) {
    if (!oracle::normal(g)) continue;
    Analysis a(g);
    const auto [s, sp] = oracle::excesses(g);
    CHECK(a.simple_excess() == s);
    CHECK(a.spectral_excess() == sp);
  }
}

TEST_CASE("layer products") {
  Analysis a(hypercube(3));
  const LayerProducts& lp = a.layer_products();
  CHECK(lp.diameter() == 3);
  // <A_k, A^k> = delta'_k; <A_0, I> = 1.
  CHECK(lp.at(0, 0) == 1);
  CHECK(lp.at(2, 2) == 6);
  CHECK(lp.at(3, 3) == 6);
  CHECK(lp.at(1, 2) == 0);
  CHECK(lp.with(2, RationalPoly({-3, 0, 1})) == 6);
}

TEST_CASE("projection sums on WDR and non-WDR digraphs") {
  for (const Digraph& g : {petersen(), hypercube(3), directed_cycle(5)}) {
    Analysis a(g);
    const ProjectionSum s = wdr_projection_sum(a.layer_products(), a.basis(), a.deltas());
    CHECK(s.total == static_cast<long>(g.order()));
    const ProjectionSum u = upper_projection_sum(a.layer_products(), a.basis(), a.deltas());
    CHECK(u.total == static_cast<long>(g.order()));
  }
  Analysis p3(path(3));
  const ProjectionSum s = wdr_projection_sum(p3.layer_products(), p3.basis(), p3.deltas());
  CHECK(s.total < 3);
  for (bool b : s.per_k_bound) CHECK(b);
  const ProjectionSum u = upper_projection_sum(p3.layer_products(), p3.basis(), p3.deltas());
  CHECK(u.total < 3);
  CHECK(u.total >= s.total);
}

TEST_CASE("generalized sums specialize and validate their subset systems") {
  Analysis a(path(4));
  const auto& lp = a.layer_products();
  const auto& b = a.basis();
  const auto& p = a.deltas();
  const std::size_t D = a.diameter();
  std::vector<std::vector<std::size_t>> diag(D + 1);
  std::vector<std::vector<std::size_t>> upper(D + 1);
  for (std::size_t k = 0; k <= D; ++k) {
    diag[k] = {k};
    for (std::size_t j = k; j <= D; ++j) upper[k].push_back(j);
  }
  CHECK(generalized_projection_sum(lp, b, p, diag, SubsetVariant::ii) == wdr_projection_sum(lp, b, p).total);
  CHECK(generalized_projection_sum(lp, b, p, diag, SubsetVariant::i) == wdr_projection_sum(lp, b, p).total);
  CHECK(generalized_projection_sum(lp, b, p, upper, SubsetVariant::ii) == upper_projection_sum(lp, b, p).total);

  auto bad = diag;
  bad.pop_back();
  CHECK_THROWS_AS(generalized_projection_sum(lp, b, p, bad, SubsetVariant::i), SubsetSystemError);
  bad = diag;
  bad[1].clear();
  CHECK_THROWS_AS(generalized_projection_sum(lp, b, p, bad, SubsetVariant::i), SubsetSystemError);
  bad = diag;
  bad[1] = {D + 1};
  CHECK_THROWS_AS(generalized_projection_sum(lp, b, p, bad, SubsetVariant::i), SubsetSystemError);
  bad = diag;
  bad[1] = {0};
  CHECK_THROWS_AS(generalized_projection_sum(lp, b, p, bad, SubsetVariant::ii), SubsetSystemError);
  CHECK(generalized_projection_sum(lp, b, p, bad, SubsetVariant::i) <= 4);
}

TEST_CASE("q norm") {
  Analysis pet(petersen());
  const QNorm q = q_norm_check(pet.basis(), pet.d(), 10);
  CHECK(q.value == 10);
  CHECK(q.equals_n);
  Analysis cube(hypercube(3));
  const QNorm c = q_norm_check(cube.basis(), cube.d(), 8);
  CHECK(c.value == oracle::q_norm2(hypercube(3)));
  CHECK(c.value == 52);
  CHECK_FALSE(c.equals_n);
  for (std::size_t n = 3; n <= 12; ++n) {
    Analysis cyc(directed_cycle(n));
    CHECK(q_norm_check(cyc.basis(), cyc.d(), n).value == static_cast<long>(n));
  }
}

TEST_CASE("weighted excess") {
  // Regular: the weighted layers coincide with the plain ones.
  for (const Digraph& g : {petersen(), hypercube(3), paley_tournament(7), directed_cycle(4)}) {
    Analysis a(g);
    const Quantity w = a.weighted_excess();
    REQUIRE(w.is_exact());
    CHECK(*w.exact == a.simple_excess());
    CHECK(a.weighted().exact);
  }
  // P_3: numeric, strictly below the spectral excess.
  Analysis p3(path(3));
  const Quantity w = p3.weighted_excess();
  CHECK_FALSE(w.is_exact());
  CHECK(w.numeric < hp::Real(Rational(8, 9)));
  CHECK(w.numeric > hp::Real(0));
}

TEST_CASE("excess inequalities on the whole corpus") {
  for (const Digraph& g : strongly_connected_corpus(4)) {
    Analysis a(g);
    CHECK(a.simple_excess() <= a.spectral_excess());
    if (a.normal()) CHECK(approx_less_equal(a.weighted_excess(), Quantity(a.spectral_excess()), 1e-9));
  }
}
