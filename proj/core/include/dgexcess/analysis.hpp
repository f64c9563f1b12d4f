#pragma once

// Per-digraph analysis context. Computes each invariant on first request and
// keeps it, so the classifiers and the report share one power cache. Not
// thread-safe; use one context per thread.

#include <memory>
#include <optional>

#include "dgexcess/digraph.hpp"
#include "dgexcess/excess.hpp"
#include "dgexcess/linalg.hpp"
#include "dgexcess/orthopoly.hpp"

namespace dgexcess {

struct AnalysisOptions {
  /// Relative tolerance for comparisons that involve an irrational lambda0.
  double weighted_tol = 1e-9;
  std::optional<double> cluster_tol;
};

class Analysis {
 public:
  explicit Analysis(Digraph g, AnalysisOptions opts = {});
  Analysis(const Analysis&) = delete;
  Analysis& operator=(const Analysis&) = delete;

  const Digraph& digraph() const { return *g_; }
  const AnalysisOptions& options() const { return opts_; }
  std::size_t order() const { return g_->order(); }

  bool strongly_connected();
  bool normal();
  const Regularity& regularity();
  const Girths& girths();

  // Everything below throws DigraphError(not_strongly_connected) when the
  // digraph is not strongly connected.
  const DistanceStructure& distances();
  const DeltaProfile& deltas();
  std::size_t diameter() { return distances().diameter; }
  bool geodetic();
  bool bipartite();

  PowerCache& powers() { return cache_; }
  const KrylovGram& krylov();
  std::size_t d_hat() { return krylov().d_hat(); }
  /// Number of distinct eigenvalues minus one (exact).
  std::size_t d();
  const PredistanceBasis& basis();
  const LayerProducts& layer_products();

  const Spectrum& spectrum();
  const HoffmanPolynomial& hoffman();
  const HoffmanMatrix& hoffman_matrix();
  const WeightedLayers& weighted();

  Rational simple_excess();
  Rational spectral_excess();
  Quantity weighted_excess();

 private:
  void require_connected();

  std::unique_ptr<const Digraph> g_;
  AnalysisOptions opts_;
  PowerCache cache_;
  std::optional<bool> connected_;
  std::optional<bool> normal_;
  std::optional<Regularity> regularity_;
  std::optional<Girths> girths_;
  std::optional<DistanceStructure> distances_;
  std::optional<DeltaProfile> deltas_;
  std::optional<bool> geodetic_;
  std::optional<bool> bipartite_;
  std::optional<KrylovGram> krylov_;
  std::optional<std::size_t> d_;
  std::optional<PredistanceBasis> basis_;
  std::optional<LayerProducts> layer_products_;
  std::optional<Spectrum> spectrum_;
  std::optional<HoffmanPolynomial> hoffman_;
  std::optional<HoffmanMatrix> hoffman_matrix_;
  std::optional<WeightedLayers> weighted_;
};

}  // namespace dgexcess
