#pragma once

// Excess quantities and the projection sums that bound them.

#include <vector>

#include "dgexcess/digraph.hpp"
#include "dgexcess/linalg.hpp"
#include "dgexcess/orthopoly.hpp"

namespace dgexcess {

/// Table of <A_k, A^i> for 0 <= k <= D and 0 <= i <= D_hat. Every inner
/// product of a distance matrix with a polynomial in A reduces to it.
class LayerProducts {
 public:
  LayerProducts(const DistanceStructure& s, PowerCache& cache, std::size_t d_hat);

  std::size_t diameter() const { return table_.size() - 1; }
  const Rational& at(std::size_t k, std::size_t i) const { return table_[k][i]; }
  /// <A_k, p(A)>
  Rational with(std::size_t k, const RationalPoly& p) const;

 private:
  std::vector<std::vector<Rational>> table_;
};

/// delta'_d^2 / delta_d, or 0 when d > D.
Rational simple_excess(const DeltaProfile& profile, std::size_t d, std::size_t diameter);

/// eps_d = ||monic[d]||^2.
Rational spectral_excess(const PredistanceBasis& basis, std::size_t d);

/// Weighted distance matrices (A~_k)_{uv} = H(A)_{uv} (A_k)_{uv}, held as
/// H(A) plus the distance layers; only their inner products are stored.
struct WeightedLayers {
  std::vector<Quantity> tilde_delta;
  std::vector<Quantity> tilde_delta_prime;
  bool exact = false;
};

WeightedLayers weighted_layers(const HoffmanMatrix& h, const DistanceStructure& s, PowerCache& cache);

/// <A~_d, A^d>^2 / delta~_d, or 0 when d > D.
Quantity weighted_excess(const WeightedLayers& w, std::size_t d, std::size_t diameter);

struct ProjectionSum {
  Rational total;
  std::vector<Rational> per_k;
  /// per_k[k] <= delta_k for each k.
  std::vector<bool> per_k_bound;
};

/// Sum over k <= D of <A_k, P_k(A)>^2 / delta_k.
ProjectionSum wdr_projection_sum(const LayerProducts& lp, const PredistanceBasis& basis, const DeltaProfile& profile);

/// Sum over k <= j <= D of <A_k, P_j(A)>^2 / delta_j.
ProjectionSum upper_projection_sum(const LayerProducts& lp, const PredistanceBasis& basis, const DeltaProfile& profile);

enum class SubsetVariant {
  /// sum_k sum_{j in S_k} <A_j, P_k(A)>^2 / delta_j
  i,
  /// sum_k sum_{j in S_k} <A_k, P_j(A)>^2 / delta_j; requires k in S_k
  ii
};

class SubsetSystemError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws SubsetSystemError on a wrong number of subsets, an empty subset,
/// an index above D, or (variant ii) a subset S_k missing k.
Rational generalized_projection_sum(const LayerProducts& lp, const PredistanceBasis& basis, const DeltaProfile& profile,
                                    const std::vector<std::vector<std::size_t>>& subsets, SubsetVariant variant);

struct QNorm {
  Rational value;
  bool equals_n = false;
};

/// ||Q_d||^2 = eps_0 + ... + eps_d compared with n.
QNorm q_norm_check(const PredistanceBasis& basis, std::size_t d, std::size_t n);

}  // namespace dgexcess
