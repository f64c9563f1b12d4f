#include "dgexcess/classify.hpp"

namespace dgexcess {
namespace {

std::string pair_string(const std::pair<Vertex, Vertex>& p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

std::string witness_string(const IntersectionWitness& w) {
  return "cell (k,i,j)=(" + std::to_string(w.cell[0]) + "," + std::to_string(w.cell[1]) + "," +
         std::to_string(w.cell[2]) + "): " + pair_string(w.first) + " gives " + w.first_value + ", " +
         pair_string(w.second) + " gives " + w.second_value;
}

// Shared driver: `cells(u, v)` returns the count grid of one pair, flattened
// as (i, j) -> value; grids are compared per distance k.
template <class Value, class CellFn, class EqualFn, class ToQuantity>
IntersectionTable build_table(const DistanceStructure& s, IntersectionTable::Kind kind, CellFn&& cells,
                              EqualFn&& equal, ToQuantity&& to_quantity) {
  IntersectionTable table;
  table.kind = kind;
  struct Reference {
    std::pair<Vertex, Vertex> pair;
    std::map<std::pair<std::size_t, std::size_t>, Value> grid;
  };
  std::vector<std::optional<Reference>> refs(s.diameter + 1);
  for (Vertex u = 0; u < s.n && table.consistent; ++u) {
    for (Vertex v = 0; v < s.n && table.consistent; ++v) {
      const std::size_t k = s.dist(u, v);
      auto grid = cells(u, v);
      if (!grid) continue;
      if (!refs[k]) {
        refs[k] = Reference{{u, v}, std::move(*grid)};
        continue;
      }
      const auto& ref = refs[k]->grid;
      // Compare over the union of keys; a missing key counts as zero.
      auto check = [&](const std::pair<std::size_t, std::size_t>& key) {
        const auto a = ref.find(key);
        const auto b = grid->find(key);
        const Value zero{};
        const Value& va = a == ref.end() ? zero : a->second;
        const Value& vb = b == grid->end() ? zero : b->second;
        if (equal(va, vb)) return true;
        table.consistent = false;
        table.witness = IntersectionWitness{{k, key.first, key.second},
                                            refs[k]->pair,
                                            {u, v},
                                            to_quantity(va).to_plain_string(),
                                            to_quantity(vb).to_plain_string()};
        return false;
      };
      bool ok = true;
      for (const auto& [key, _] : ref)
        if (ok) ok = check(key);
      for (const auto& [key, _] : *grid)
        if (ok) ok = check(key);
    }
  }
  for (std::size_t k = 0; k < refs.size(); ++k) {
    if (!refs[k]) continue;
    for (const auto& [key, value] : refs[k]->grid) table.values[{k, key.first, key.second}] = to_quantity(value);
  }
  return table;
}

Verdict table_verdict(const std::string& property, const IntersectionTable& table, std::size_t pairs) {
  Verdict v;
  v.property = property;
  v.decision = table.consistent;
  v.method = Method::direct;
  v.certificate.emplace_back("vertex_pairs", std::to_string(pairs));
  v.certificate.emplace_back("cells", std::to_string(table.values.size()));
  if (table.witness) v.certificate.emplace_back("witness", witness_string(*table.witness));
  return v;
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::direct:
      return "direct";
    case Method::spectral_exact:
      return "spectral-exact";
    case Method::spectral_numeric:
      return "spectral-numeric";
  }
  return "unknown";
}

std::string to_string(Branch b) {
  switch (b) {
    case Branch::bipartite:
      return "bipartite";
    case Branch::generalized_odd_graph:
      return "generalized-odd-graph";
    case Branch::small_odd_girth:
      return "small-odd-girth";
  }
  return "unknown";
}

const std::string* Verdict::find(const std::string& key) const {
  for (const auto& [k, v] : certificate)
    if (k == key) return &v;
  return nullptr;
}

std::pair<Verdict, IntersectionTable> wdr_direct(const DistanceStructure& s) {
  using Grid = std::map<std::pair<std::size_t, std::size_t>, long>;
  auto cells = [&](Vertex u, Vertex v) -> std::optional<Grid> {
    Grid g;
    for (Vertex w = 0; w < s.n; ++w) ++g[{s.dist(u, w), s.dist(w, v)}];
    return g;
  };
  auto table = build_table<long>(
      s, IntersectionTable::Kind::wdr, cells, [](long a, long b) { return a == b; },
      [](long x) { return Quantity(Rational(x)); });
  Verdict v = table_verdict("wdr", table, s.n * s.n);
  return {std::move(v), std::move(table)};
}

std::pair<Verdict, IntersectionTable> dr_direct(const DistanceStructure& s) {
  using Grid = std::map<std::pair<std::size_t, std::size_t>, long>;
  auto cells = [&](Vertex u, Vertex v) -> std::optional<Grid> {
    const std::size_t k = s.dist(u, v);
    if (k == 0) return std::nullopt;
    Grid g;
    for (std::size_t i = 0; i <= k + 1; ++i) g[{i, 1}] = 0;
    for (Vertex w = 0; w < s.n; ++w)
      if (s.dist(v, w) == 1) ++g[{s.dist(u, w), 1}];
    return g;
  };
  auto table = build_table<long>(
      s, IntersectionTable::Kind::dr, cells, [](long a, long b) { return a == b; },
      [](long x) { return Quantity(Rational(x)); });
  Verdict v = table_verdict("dr", table, s.n * s.n - s.n);
  return {std::move(v), std::move(table)};
}

IntersectionTable weighted_intersection_table(const DistanceStructure& s, const HoffmanMatrix& h, double tol) {
  if (h.is_exact()) {
    using Grid = std::map<std::pair<std::size_t, std::size_t>, Rational>;
    auto cells = [&](Vertex u, Vertex v) -> std::optional<Grid> {
      Grid g;
      for (Vertex w = 0; w < s.n; ++w) g[{s.dist(u, w), s.dist(w, v)}] += (*h.exact)(w, w);
      return g;
    };
    return build_table<Rational>(
        s, IntersectionTable::Kind::weighted, cells, [](const Rational& a, const Rational& b) { return a == b; },
        [](const Rational& x) { return Quantity(x); });
  }
  hp::PrecisionScope scope(h.numeric.rows() > 0 ? h.numeric(0, 0).digits() : hp::default_digits());
  using Grid = std::map<std::pair<std::size_t, std::size_t>, hp::Real>;
  auto cells = [&](Vertex u, Vertex v) -> std::optional<Grid> {
    Grid g;
    for (Vertex w = 0; w < s.n; ++w) g[{s.dist(u, w), s.dist(w, v)}] += h.numeric(w, w);
    return g;
  };
  auto equal = [tol](const hp::Real& a, const hp::Real& b) { return approx_equal(Quantity(a), Quantity(b), tol); };
  return build_table<hp::Real>(s, IntersectionTable::Kind::weighted, cells, equal,
                               [](const hp::Real& x) { return Quantity(x); });
}

Verdict dr_by_simple_set(Analysis& a) {
  Verdict v;
  v.property = "dr";
  v.method = Method::spectral_exact;
  const Rational simple = a.simple_excess();
  const Rational spectral = a.spectral_excess();
  const bool normal = a.normal();
  v.decision = normal && simple == spectral;
  v.certificate.emplace_back("simple_excess", to_fraction_string(simple));
  v.certificate.emplace_back("spectral_excess", to_fraction_string(spectral));
  v.certificate.emplace_back("difference", to_fraction_string(Rational(spectral - simple)));
  v.certificate.emplace_back("normal", normal ? "true" : "false");
  if (!normal) v.note = "not normal; the equality criterion does not apply";
  return v;
}

Verdict dr_by_weighted_set(Analysis& a, double tol) {
  Verdict v;
  v.property = "dr-weighted";
  const Quantity weighted = a.weighted_excess();
  const Quantity spectral(a.spectral_excess());
  const bool normal = a.normal();
  v.method = weighted.is_exact() ? Method::spectral_exact : Method::spectral_numeric;
  v.decision = normal && approx_equal(weighted, spectral, tol);
  v.certificate.emplace_back("weighted_excess", weighted.to_string());
  v.certificate.emplace_back("spectral_excess", spectral.to_string());
  v.certificate.emplace_back("difference", (spectral - weighted).to_string());
  if (!weighted.is_exact()) {
    v.certificate.emplace_back("tolerance", hp::Real(tol).to_string(3));
    v.certificate.emplace_back("digits", std::to_string(weighted.numeric.digits()));
  }
  v.certificate.emplace_back("normal", normal ? "true" : "false");
  if (!normal) v.note = "not normal; the equality criterion does not apply";
  return v;
}

Verdict geodetic_dr_check(Analysis& a) {
  Verdict v;
  v.property = "geodetic-dr";
  v.method = Method::spectral_exact;
  const QNorm q = q_norm_check(a.basis(), a.d(), a.order());
  const bool normal = a.normal();
  v.decision = normal && q.equals_n;
  v.certificate.emplace_back("q_norm2", to_fraction_string(q.value));
  v.certificate.emplace_back("n", std::to_string(a.order()));
  v.certificate.emplace_back("normal", normal ? "true" : "false");
  if (!normal) v.note = "not normal; the equality criterion does not apply";
  return v;
}

Verdict wdr_by_projection_sum(Analysis& a) {
  Verdict v;
  v.property = "wdr-projection";
  v.method = Method::spectral_exact;
  const ProjectionSum ps = wdr_projection_sum(a.layer_products(), a.basis(), a.deltas());
  const Rational n(static_cast<unsigned long>(a.order()));
  v.decision = ps.total == n;
  v.certificate.emplace_back("projection_sum", to_fraction_string(ps.total));
  v.certificate.emplace_back("n", std::to_string(a.order()));
  v.certificate.emplace_back("difference", to_fraction_string(Rational(n - ps.total)));
  return v;
}

Verdict wdr_by_upper_sum(Analysis& a) {
  Verdict v;
  v.property = "wdr-upper";
  v.method = Method::spectral_exact;
  const ProjectionSum ps = upper_projection_sum(a.layer_products(), a.basis(), a.deltas());
  const Rational n(static_cast<unsigned long>(a.order()));
  v.decision = ps.total == n;
  v.certificate.emplace_back("projection_sum", to_fraction_string(ps.total));
  v.certificate.emplace_back("n", std::to_string(a.order()));
  v.certificate.emplace_back("difference", to_fraction_string(Rational(n - ps.total)));
  return v;
}

Verdict generalized_odd_graph_check(Analysis& a) {
  Verdict v;
  v.property = "gog";
  v.method = Method::direct;
  const bool dr = dr_direct(a.distances()).first.decision;
  const bool symmetric = a.digraph().symmetric();
  const CycleLength& go = a.girths().odd_girth;
  const std::size_t target = 2 * a.diameter() + 1;
  v.decision = dr && symmetric && go.is_finite() && go.value() == target;
  v.certificate.emplace_back("dr", dr ? "true" : "false");
  v.certificate.emplace_back("symmetric", symmetric ? "true" : "false");
  v.certificate.emplace_back("odd_girth", go.to_string());
  v.certificate.emplace_back("2D+1", std::to_string(target));
  return v;
}

CycleLength odd_girth_spectral(const std::vector<Integer>& traces) {
  for (std::size_t k = 1; k < traces.size(); k += 2)
    if (!is_zero(traces[k])) return CycleLength::finite(k);
  return CycleLength::infinite();
}

std::set<Branch> trichotomy(Analysis& a) {
  if (!a.normal()) throw ClassifyError(ClassifyError::Kind::precondition, "trichotomy requires a normal digraph");
  std::set<Branch> branches;
  if (a.bipartite()) branches.insert(Branch::bipartite);
  if (generalized_odd_graph_check(a).decision) branches.insert(Branch::generalized_odd_graph);
  const CycleLength& go = a.girths().odd_girth;
  if (go.is_finite()) {
    const long bound = std::min(2 * static_cast<long>(a.d()) - 1, 2 * static_cast<long>(a.diameter()) + 1);
    if (static_cast<long>(go.value()) <= bound) branches.insert(Branch::small_odd_girth);
  }
  if (branches.empty()) {
    throw ClassifyError(ClassifyError::Kind::counterexample,
                        "no trichotomy branch holds (odd girth " + go.to_string() + ", d = " + std::to_string(a.d()) +
                            ", D = " + std::to_string(a.diameter()) + ")");
  }
  return branches;
}

}  // namespace dgexcess
