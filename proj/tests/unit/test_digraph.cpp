#include <doctest.h>

#include "../oracles.hpp"
#include "corpus.hpp"
#include "dgexcess/digraph.hpp"
#include "dgexcess/generators.hpp"

using namespace dgexcess;

TEST_CASE("construction rejects malformed arc lists") {
  auto kind_of = [](std::size_t n, std::vector<Arc> arcs) {
    try {
      Digraph g(n, std::move(arcs));
    } catch (const DigraphError& e) {
      return e.kind();
    }
    FAIL("no error");
    return DigraphError::Kind::empty;
  };
  CHECK(kind_of(0, {}) == DigraphError::Kind::empty);
  CHECK(kind_of(2, {{0, 0}}) == DigraphError::Kind::loop);
  CHECK(kind_of(2, {{0, 1}, {0, 1}}) == DigraphError::Kind::duplicate_arc);
  CHECK(kind_of(2, {{0, 2}}) == DigraphError::Kind::vertex_out_of_range);
}

TEST_CASE("arcs are sorted and neighbors indexed") {
  const Digraph g(3, {{2, 0}, {0, 1}, {1, 2}, {0, 2}});
  CHECK(g.arcs().front() == Arc{0, 1});
  CHECK(g.out_neighbors(0) == std::vector<Vertex>{1, 2});
  CHECK(g.in_neighbors(2) == std::vector<Vertex>{0, 1});
  CHECK(g.has_arc(2, 0));
  CHECK_FALSE(g.has_arc(0, 0));
  CHECK_FALSE(g.symmetric());
  CHECK(path(3).symmetric());
}

TEST_CASE("strong connectivity agrees with DFS on every digraph up to 3 vertices") {
  EnumerationOptions all;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const Digraph& g : enumerate_digraphs(n, all)) CHECK(strong_connectivity(g) == oracle::strongly_connected(g));
  }
}

TEST_CASE("distances and shortest-path counts agree with path enumeration") {
  auto corpus = strongly_connected_corpus(4);
  corpus.push_back(petersen());
  corpus.push_back(hypercube(3));
  corpus.push_back(kneser_odd_graph(2));
  corpus.push_back(directed_cycle(7));
  for (const Digraph& g : corpus) {
    const DistanceStructure s = distance_structure(g);
    const oracle::Paths p = oracle::enumerate_paths(g);
    REQUIRE(s.diameter == p.diameter);
    bool same = true;
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = 0; v < g.order(); ++v) {
        const std::size_t k = s.distance(u, v);
        same = same && p.dist[u][v] == k && s.layers[k](u, v) == 1 &&
               s.path_counts[k](u, v) == static_cast<unsigned long>(p.count[u][v]);
      }
    }
    CHECK(same);
  }
}

TEST_CASE("distance structure rejects disconnected input") {
  const Digraph g(3, {{0, 1}, {1, 0}});
  CHECK_FALSE(strong_connectivity(g));
  CHECK_THROWS_AS(distance_structure(g), DigraphError);
  CHECK_FALSE(bfs_distances(g, 0)[2].has_value());
}

TEST_CASE("delta profile of small examples") {
  // P_3: one vertex at distance 2 from each end.
  const DeltaProfile p = delta_profile(distance_structure(path(3)));
  REQUIRE(p.delta.size() == 3);
  CHECK(p.delta[1] == Rational(4, 3));
  CHECK(p.delta[2] == Rational(2, 3));
  CHECK(p.delta_prime[2] == Rational(2, 3));
  const DeltaProfile q = delta_profile(distance_structure(hypercube(3)));
  CHECK(q.delta == std::vector<Rational>{1, 3, 3, 1});
  CHECK(q.delta_prime == std::vector<Rational>{1, 3, 6, 6});
}

TEST_CASE("girths and bipartiteness") {
  for (const Digraph& g : strongly_connected_corpus(4)) {
    const Girths gi = girth_and_odd_girth(g);
    const std::size_t og = oracle::odd_girth(g);
    CHECK(gi.odd_girth == (og == 0 ? CycleLength::infinite() : CycleLength::finite(og)));
    CHECK(bipartite_test(g) == (og == 0));
  }
  CHECK(girth_and_odd_girth(directed_cycle(6)).girth == CycleLength::finite(6));
  CHECK(girth_and_odd_girth(directed_cycle(6)).odd_girth == CycleLength::infinite());
  CHECK(girth_and_odd_girth(petersen()).odd_girth == CycleLength::finite(5));
  CHECK(girth_and_odd_girth(petersen()).girth == CycleLength::finite(2));
  CHECK_THROWS_AS(CycleLength::infinite().value(), std::logic_error);
}

TEST_CASE("geodetic and regular") {
  for (const Digraph& g : strongly_connected_corpus(4)) {
    const oracle::Paths p = oracle::enumerate_paths(g);
    bool unique = true;
    for (const auto& row : p.count)
      for (std::size_t c : row) unique = unique && c == 1;
    CHECK(geodetic_test(distance_structure(g)) == unique);
  }
  CHECK(geodetic_test(distance_structure(petersen())));
  CHECK_FALSE(geodetic_test(distance_structure(hypercube(3))));
  CHECK(regularity_test(complete(5)).degree == 4);
  CHECK_FALSE(regularity_test(path(3)).regular);
  // Equal out-degrees but unequal in-degrees.
  CHECK_FALSE(regularity_test(Digraph(3, {{0, 1}, {1, 0}, {2, 0}})).regular);
}
