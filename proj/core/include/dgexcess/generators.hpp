#pragma once

// Named digraph families and enumeration of small labeled digraphs.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dgexcess/digraph.hpp"

namespace dgexcess {

class GeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Digraph directed_cycle(std::size_t n);
Digraph complete(std::size_t n);
Digraph complete_bipartite(std::size_t a, std::size_t b);
/// Undirected path on n vertices, each edge as two arcs.
Digraph path(std::size_t n);
Digraph hypercube(std::size_t k);
Digraph petersen();
/// Odd graph O_k: (k-1)-subsets of a (2k-1)-set, adjacent when disjoint. k >= 2.
Digraph kneser_odd_graph(std::size_t k);
/// Arcs u -> u + s (mod n) for s in `connections` (nonzero residues).
Digraph circulant(std::size_t n, const std::vector<std::size_t>& connections);
/// u -> v iff v - u is a nonzero square mod q; q prime, q = 3 mod 4.
Digraph paley_tournament(std::size_t q);
/// A ⊗ J_m on V x [m]: ((u,i),(v,j)) is an arc iff (u,v) is. Vertex (u,i) is u*m + i.
Digraph tensor_lift(const Digraph& inner, std::size_t m);

/// Family name plus integer parameters, e.g. {"circulant", {7, 1, 2, 4}}.
struct FamilySpec {
  std::string family;
  std::vector<std::size_t> params;
  /// Applied last when set (m >= 2).
  std::optional<std::size_t> lift;
};

/// Names accepted by generate().
const std::vector<std::string>& family_names();

/// Throws GeneratorError on an unknown family or invalid parameters.
Digraph generate(const FamilySpec& spec);

enum class EnumFilter { all, strongly_connected, normal };

struct EnumerationOptions {
  EnumFilter filter = EnumFilter::all;
  /// Draw this many distinct labeled digraphs uniformly instead of all.
  std::optional<std::size_t> sample;
  std::uint64_t seed = 20240101;
  std::size_t exhaustive_cap = 5;
  std::size_t sampled_cap = 6;
};

/// Calls `visit` for each labeled loopless digraph on n vertices that passes
/// the filter, in increasing order of the arc bitmask (sampled masks are
/// sorted too). Returning false from `visit` stops the walk. Returns the
/// number visited. Throws GeneratorError beyond the caps. For normal, the
/// digraph must also be strongly connected.
std::size_t enumerate_digraphs(std::size_t n, const EnumerationOptions& opts,
                               const std::function<bool(const Digraph&)>& visit);

/// The arc bitmasks (see digraph_from_mask) that enumerate_digraphs visits.
std::vector<std::uint64_t> enumerate_masks(std::size_t n, const EnumerationOptions& opts);

/// Convenience wrapper that collects the stream.
std::vector<Digraph> enumerate_digraphs(std::size_t n, const EnumerationOptions& opts);

/// Digraph on n vertices whose arcs are the set bits of `mask` over the
/// ordered pairs (u,v), u != v, in row-major order.
Digraph digraph_from_mask(std::size_t n, std::uint64_t mask);

}  // namespace dgexcess
