#pragma once

// Simple digraphs and their purely combinatorial invariants.

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dgexcess/exact.hpp"
#include "dgexcess/matrix.hpp"

namespace dgexcess {

using Vertex = std::size_t;

struct Arc {
  Vertex from;
  Vertex to;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

class DigraphError : public std::invalid_argument {
 public:
  enum class Kind { empty, loop, duplicate_arc, vertex_out_of_range, not_strongly_connected };

  DigraphError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Loopless digraph without repeated arcs on vertices 0..n-1. Immutable.
class Digraph {
 public:
  /// Throws DigraphError on a loop, a repeated arc, an out-of-range
  /// endpoint, or n == 0.
  Digraph(std::size_t n, std::vector<Arc> arcs);

  std::size_t order() const { return n_; }
  std::size_t arc_count() const { return arcs_.size(); }
  /// Arcs in lexicographic order.
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<Vertex>& out_neighbors(Vertex v) const { return out_[v]; }
  const std::vector<Vertex>& in_neighbors(Vertex v) const { return in_[v]; }
  bool has_arc(Vertex u, Vertex v) const { return adj_[u * n_ + v] != 0; }
  bool symmetric() const;

  IntMatrix adjacency() const;

  friend bool operator==(const Digraph& a, const Digraph& b) { return a.n_ == b.n_ && a.arcs_ == b.arcs_; }

 private:
  std::size_t n_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<unsigned char> adj_;
};

Digraph build_digraph(std::size_t n, const std::vector<Arc>& arcs);

bool strong_connectivity(const Digraph& g);

/// BFS distances from `source` along arcs; unreachable vertices get nullopt.
std::vector<std::optional<std::size_t>> bfs_distances(const Digraph& g, Vertex source);

/// Directed distances, distance layers A_0..A_D, and shortest-path counts
/// rho_k(v,u) (entry (v,u) of the k-th count matrix, zero off layer k).
struct DistanceStructure {
  std::size_t n = 0;
  std::size_t diameter = 0;
  Matrix<std::size_t> dist;
  std::vector<Matrix<int>> layers;
  std::vector<IntMatrix> path_counts;

  std::size_t distance(Vertex u, Vertex v) const { return dist(u, v); }
  /// Gamma^+_k(v): vertices at distance k from v.
  std::vector<Vertex> out_shell(Vertex v, std::size_t k) const;
  /// Gamma^-_k(v): vertices from which v is at distance k.
  std::vector<Vertex> in_shell(Vertex v, std::size_t k) const;
};

/// Throws DigraphError(not_strongly_connected) when some pair is unreachable.
DistanceStructure distance_structure(const Digraph& g);

struct DeltaProfile {
  std::vector<Rational> delta;
  std::vector<Rational> delta_prime;
  /// per_vertex_delta[k][v] = |Gamma^+_k(v)|
  std::vector<std::vector<std::size_t>> per_vertex_delta;
  /// per_vertex_delta_prime[k][v] = number of length-k paths from v into Gamma^+_k(v)
  std::vector<std::vector<Integer>> per_vertex_delta_prime;
};

DeltaProfile delta_profile(const DistanceStructure& s);

/// Length of a shortest cycle of some kind; `infinite` when there is none.
class CycleLength {
 public:
  static CycleLength infinite() { return CycleLength(); }
  static CycleLength finite(std::size_t len) { return CycleLength(len); }

  bool is_finite() const { return finite_; }
  std::size_t value() const {
    if (!finite_) throw std::logic_error("cycle length is infinite");
    return len_;
  }
  std::string to_string() const { return finite_ ? std::to_string(len_) : "infinite"; }

  friend bool operator==(const CycleLength&, const CycleLength&) = default;

 private:
  CycleLength() = default;
  explicit CycleLength(std::size_t len) : finite_(true), len_(len) {}
  bool finite_ = false;
  std::size_t len_ = 0;
};

struct Girths {
  CycleLength girth;
  CycleLength odd_girth;
};

Girths girth_and_odd_girth(const Digraph& g);

/// No odd closed directed walk. Precondition: strongly connected.
bool bipartite_test(const Digraph& g);

/// Every pair at distance k <= D is joined by exactly one shortest path.
bool geodetic_test(const DistanceStructure& s);

struct Regularity {
  bool regular = false;
  std::optional<std::size_t> degree;
};

Regularity regularity_test(const Digraph& g);

}  // namespace dgexcess
