#include "dgexcess/analysis.hpp"

namespace dgexcess {

Analysis::Analysis(Digraph g, AnalysisOptions opts)
    : g_(std::make_unique<const Digraph>(std::move(g))), opts_(opts), cache_(*g_) {}

bool Analysis::strongly_connected() {
  if (!connected_) connected_ = strong_connectivity(*g_);
  return *connected_;
}

void Analysis::require_connected() {
  if (!strongly_connected()) {
    throw DigraphError(DigraphError::Kind::not_strongly_connected, "digraph is not strongly connected");
  }
}

bool Analysis::normal() {
  if (!normal_) normal_ = normality_test(*g_);
  return *normal_;
}

const Regularity& Analysis::regularity() {
  if (!regularity_) regularity_ = regularity_test(*g_);
  return *regularity_;
}

const Girths& Analysis::girths() {
  if (!girths_) girths_ = girth_and_odd_girth(*g_);
  return *girths_;
}

const DistanceStructure& Analysis::distances() {
  require_connected();
  if (!distances_) distances_ = distance_structure(*g_);
  return *distances_;
}

const DeltaProfile& Analysis::deltas() {
  if (!deltas_) deltas_ = delta_profile(distances());
  return *deltas_;
}

bool Analysis::geodetic() {
  if (!geodetic_) geodetic_ = geodetic_test(distances());
  return *geodetic_;
}

bool Analysis::bipartite() {
  require_connected();
  if (!bipartite_) bipartite_ = bipartite_test(*g_);
  return *bipartite_;
}

const KrylovGram& Analysis::krylov() {
  require_connected();
  if (!krylov_) krylov_ = krylov_gram_elimination(cache_);
  return *krylov_;
}

std::size_t Analysis::d() {
  if (!d_) d_ = distinct_eigenvalue_index(krylov().minimal);
  return *d_;
}

const PredistanceBasis& Analysis::basis() {
  if (!basis_) basis_ = predistance_polynomials(krylov(), deltas());
  return *basis_;
}

const LayerProducts& Analysis::layer_products() {
  if (!layer_products_) layer_products_.emplace(distances(), cache_, d_hat());
  return *layer_products_;
}

const Spectrum& Analysis::spectrum() {
  if (!spectrum_) {
    SpectrumOptions so;
    so.cluster_tol = opts_.cluster_tol;
    spectrum_ = dgexcess::spectrum(cache_, krylov(), so);
  }
  return *spectrum_;
}

const HoffmanPolynomial& Analysis::hoffman() {
  if (!hoffman_) hoffman_ = hoffman_polynomial(krylov().minimal, spectrum().lambda0, order());
  return *hoffman_;
}

const HoffmanMatrix& Analysis::hoffman_matrix() {
  if (!hoffman_matrix_) hoffman_matrix_ = dgexcess::hoffman_matrix(hoffman(), cache_);
  return *hoffman_matrix_;
}

const WeightedLayers& Analysis::weighted() {
  if (!weighted_) weighted_ = weighted_layers(hoffman_matrix(), distances(), cache_);
  return *weighted_;
}

Rational Analysis::simple_excess() { return dgexcess::simple_excess(deltas(), d(), diameter()); }

Rational Analysis::spectral_excess() { return dgexcess::spectral_excess(basis(), d()); }

Quantity Analysis::weighted_excess() { return dgexcess::weighted_excess(weighted(), d(), diameter()); }

}  // namespace dgexcess
