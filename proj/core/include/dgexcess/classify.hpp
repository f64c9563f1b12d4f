#pragma once

// Distance-regularity decisions: direct combinatorial oracles and the
// spectral criteria, each returned with the values that decided it.

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dgexcess/analysis.hpp"

namespace dgexcess {

enum class Method { direct, spectral_exact, spectral_numeric };
std::string to_string(Method m);

struct Verdict {
  std::string property;
  bool decision = false;
  Method method = Method::direct;
  /// Named supporting values in insertion order, e.g. both sides of the
  /// deciding (in)equality and their difference.
  std::vector<std::pair<std::string, std::string>> certificate;
  std::string note;

  const std::string* find(const std::string& key) const;
};

/// Two vertex pairs at the same distance k whose counts differ in cell (k,i,j).
struct IntersectionWitness {
  std::array<std::size_t, 3> cell{};
  std::pair<Vertex, Vertex> first;
  std::pair<Vertex, Vertex> second;
  std::string first_value;
  std::string second_value;
};

struct IntersectionTable {
  enum class Kind { wdr, dr, weighted };
  Kind kind = Kind::wdr;
  /// (k, i, j) -> value taken from the first pair seen at distance k. For
  /// Kind::dr the key is (k, i, 1).
  std::map<std::array<std::size_t, 3>, Quantity> values;
  bool consistent = true;
  std::optional<IntersectionWitness> witness;
};

/// p^k_ij(u,v) = |Gamma+_i(u) ∩ Gamma-_j(v)| constant per distance k.
std::pair<Verdict, IntersectionTable> wdr_direct(const DistanceStructure& s);

/// |Gamma+_i(u) ∩ Gamma+_1(v)| constant over pairs at distance k >= 1, 0 <= i <= k+1.
std::pair<Verdict, IntersectionTable> dr_direct(const DistanceStructure& s);

/// Sums of H(A)_ww over Gamma+_i(u) ∩ Gamma-_j(v); consistency within
/// tol * max(1, |value|) unless H(A) is exact.
IntersectionTable weighted_intersection_table(const DistanceStructure& s, const HoffmanMatrix& h, double tol);

Verdict dr_by_simple_set(Analysis& a);
Verdict dr_by_weighted_set(Analysis& a, double tol);
Verdict geodetic_dr_check(Analysis& a);
Verdict wdr_by_projection_sum(Analysis& a);
Verdict wdr_by_upper_sum(Analysis& a);
Verdict generalized_odd_graph_check(Analysis& a);

/// Smallest odd k with tr(A^k) != 0, from traces[0..]; infinite if none.
CycleLength odd_girth_spectral(const std::vector<Integer>& traces);

enum class Branch { bipartite, generalized_odd_graph, small_odd_girth };
std::string to_string(Branch b);

class ClassifyError : public std::runtime_error {
 public:
  enum class Kind { precondition, counterexample };
  ClassifyError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Branches that hold among: bipartite; generalized odd graph;
/// g_o <= min(2d-1, 2D+1). Throws ClassifyError(precondition) when the
/// digraph is not normal and ClassifyError(counterexample) on an empty set.
std::set<Branch> trichotomy(Analysis& a);

}  // namespace dgexcess
