#include "dgexcess/digraph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace dgexcess {

Digraph::Digraph(std::size_t n, std::vector<Arc> arcs)
    : n_(n), arcs_(std::move(arcs)), out_(n), in_(n), adj_(n * n, 0) {
  if (n_ == 0) throw DigraphError(DigraphError::Kind::empty, "digraph must have at least one vertex");
  for (const Arc& a : arcs_) {
    if (a.from >= n_ || a.to >= n_) {
      throw DigraphError(DigraphError::Kind::vertex_out_of_range,
                         "arc (" + std::to_string(a.from) + "," + std::to_string(a.to) +
                             ") has an endpoint outside [0," + std::to_string(n_) + ")");
    }
    if (a.from == a.to) {
      throw DigraphError(DigraphError::Kind::loop, "loop at vertex " + std::to_string(a.from));
    }
    unsigned char& cell = adj_[a.from * n_ + a.to];
    if (cell != 0) {
      throw DigraphError(DigraphError::Kind::duplicate_arc,
                         "duplicate arc (" + std::to_string(a.from) + "," + std::to_string(a.to) + ")");
    }
    cell = 1;
  }
  std::sort(arcs_.begin(), arcs_.end());
  for (const Arc& a : arcs_) {
    out_[a.from].push_back(a.to);
    in_[a.to].push_back(a.from);
  }
}

bool Digraph::symmetric() const {
  for (const Arc& a : arcs_)
    if (!has_arc(a.to, a.from)) return false;
  return true;
}

IntMatrix Digraph::adjacency() const {
  IntMatrix a(n_, n_);
  for (const Arc& arc : arcs_) a(arc.from, arc.to) = 1;
  return a;
}

Digraph build_digraph(std::size_t n, const std::vector<Arc>& arcs) { return Digraph(n, arcs); }

std::vector<std::optional<std::size_t>> bfs_distances(const Digraph& g, Vertex source) {
  std::vector<std::optional<std::size_t>> dist(g.order());
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.out_neighbors(x)) {
      if (!dist[y]) {
        dist[y] = *dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

bool strong_connectivity(const Digraph& g) {
  // Everything reachable from 0 along arcs and along reversed arcs.
  for (int pass = 0; pass < 2; ++pass) {
    std::vector<bool> seen(g.order(), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      const auto& next = pass == 0 ? g.out_neighbors(x) : g.in_neighbors(x);
      for (Vertex y : next) {
        if (!seen[y]) {
          seen[y] = true;
          ++count;
          stack.push_back(y);
        }
      }
    }
    if (count != g.order()) return false;
  }
  return true;
}

std::vector<Vertex> DistanceStructure::out_shell(Vertex v, std::size_t k) const {
  std::vector<Vertex> shell;
  for (Vertex u = 0; u < n; ++u)
    if (dist(v, u) == k) shell.push_back(u);
  return shell;
}

std::vector<Vertex> DistanceStructure::in_shell(Vertex v, std::size_t k) const {
  std::vector<Vertex> shell;
  for (Vertex u = 0; u < n; ++u)
    if (dist(u, v) == k) shell.push_back(u);
  return shell;
}

DistanceStructure distance_structure(const Digraph& g) {
  const std::size_t n = g.order();
  DistanceStructure s;
  s.n = n;
  s.dist = Matrix<std::size_t>(n, n);
  for (Vertex v = 0; v < n; ++v) {
    const auto d = bfs_distances(g, v);
    for (Vertex u = 0; u < n; ++u) {
      if (!d[u]) {
        throw DigraphError(DigraphError::Kind::not_strongly_connected,
                           "vertex " + std::to_string(u) + " is unreachable from " + std::to_string(v));
      }
      s.dist(v, u) = *d[u];
      s.diameter = std::max(s.diameter, *d[u]);
    }
  }

  s.layers.assign(s.diameter + 1, Matrix<int>(n, n, 0));
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u = 0; u < n; ++u) s.layers[s.dist(v, u)](v, u) = 1;

  // A walk of length k ending at distance k is a shortest path, so masking
  // A^k by layer k counts shortest paths.
  IntMatrix power = IntMatrix::identity(n);
  s.path_counts.reserve(s.diameter + 1);
  for (std::size_t k = 0; k <= s.diameter; ++k) {
    if (k > 0) {
      IntMatrix next(n, n);
      for (Vertex v = 0; v < n; ++v)
        for (Vertex u = 0; u < n; ++u)
          for (Vertex w : g.in_neighbors(u)) next(v, u) += power(v, w);
      power = std::move(next);
    }
    IntMatrix masked(n, n);
    for (Vertex v = 0; v < n; ++v)
      for (Vertex u = 0; u < n; ++u)
        if (s.dist(v, u) == k) masked(v, u) = power(v, u);
    s.path_counts.push_back(std::move(masked));
  }
  return s;
}

DeltaProfile delta_profile(const DistanceStructure& s) {
  const std::size_t n = s.n;
  const std::size_t levels = s.diameter + 1;
  DeltaProfile p;
  p.per_vertex_delta.assign(levels, std::vector<std::size_t>(n, 0));
  p.per_vertex_delta_prime.assign(levels, std::vector<Integer>(n, 0));
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u = 0; u < n; ++u) {
      const std::size_t k = s.dist(v, u);
      p.per_vertex_delta[k][v] += 1;
      p.per_vertex_delta_prime[k][v] += s.path_counts[k](v, u);
    }
  }
  for (std::size_t k = 0; k < levels; ++k) {
    Integer sum_d = 0;
    Integer sum_dp = 0;
    for (Vertex v = 0; v < n; ++v) {
      sum_d += static_cast<unsigned long>(p.per_vertex_delta[k][v]);
      sum_dp += p.per_vertex_delta_prime[k][v];
    }
    Rational d(sum_d, Integer(static_cast<unsigned long>(n)));
    Rational dp(sum_dp, Integer(static_cast<unsigned long>(n)));
    d.canonicalize();
    dp.canonicalize();
    p.delta.push_back(d);
    p.delta_prime.push_back(dp);
  }
  return p;
}

Girths girth_and_odd_girth(const Digraph& g) {
  const std::size_t n = g.order();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  std::size_t girth = kNone;
  for (Vertex v = 0; v < n; ++v) {
    const auto d = bfs_distances(g, v);
    for (Vertex u : g.in_neighbors(v))
      if (d[u]) girth = std::min(girth, *d[u] + 1);
  }

  // Shortest odd closed walk through s: BFS over (vertex, parity) states.
  std::size_t odd = kNone;
  for (Vertex s = 0; s < n; ++s) {
    std::vector<std::size_t> dist(2 * n, kNone);
    std::deque<std::size_t> queue{2 * s};
    dist[2 * s] = 0;
    while (!queue.empty()) {
      const std::size_t state = queue.front();
      queue.pop_front();
      if (dist[state] + 1 >= odd) break;
      const Vertex x = state / 2;
      const std::size_t parity = state % 2;
      for (Vertex y : g.out_neighbors(x)) {
        const std::size_t next = 2 * y + (1 - parity);
        if (dist[next] == kNone) {
          dist[next] = dist[state] + 1;
          queue.push_back(next);
        }
      }
    }
    if (dist[2 * s + 1] != kNone) odd = std::min(odd, dist[2 * s + 1]);
  }

  return {girth == kNone ? CycleLength::infinite() : CycleLength::finite(girth),
          odd == kNone ? CycleLength::infinite() : CycleLength::finite(odd)};
}

bool bipartite_test(const Digraph& g) {
  // Parity labels from BFS depth; an arc between equal labels closes an odd walk.
  const auto depth = bfs_distances(g, 0);
  for (const Arc& a : g.arcs()) {
    if (!depth[a.from] || !depth[a.to]) {
      throw DigraphError(DigraphError::Kind::not_strongly_connected, "bipartite_test requires a strongly connected digraph");
    }
    if ((*depth[a.from] % 2) == (*depth[a.to] % 2)) return false;
  }
  return true;
}

bool geodetic_test(const DistanceStructure& s) {
  for (std::size_t k = 0; k <= s.diameter; ++k)
    for (Vertex v = 0; v < s.n; ++v)
      for (Vertex u = 0; u < s.n; ++u)
        if (s.dist(v, u) == k && s.path_counts[k](v, u) != 1) return false;
  return true;
}

Regularity regularity_test(const Digraph& g) {
  const std::size_t k = g.out_neighbors(0).size();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.out_neighbors(v).size() != k || g.in_neighbors(v).size() != k) return {false, std::nullopt};
  }
  return {true, k};
}

}  // namespace dgexcess
