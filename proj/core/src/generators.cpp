#include "dgexcess/generators.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <unordered_set>

#include "dgexcess/linalg.hpp"

namespace dgexcess {
namespace {

void add_edge(std::vector<Arc>& arcs, Vertex u, Vertex v) {
  arcs.push_back({u, v});
  arcs.push_back({v, u});
}

bool is_prime(std::size_t q) {
  if (q < 2) return false;
  for (std::size_t p = 2; p * p <= q; ++p)
    if (q % p == 0) return false;
  return true;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw GeneratorError(message);
}

std::size_t pair_count(std::size_t n) { return n * (n - 1); }

bool passes(const Digraph& g, EnumFilter filter) {
  switch (filter) {
    case EnumFilter::all:
      return true;
    case EnumFilter::strongly_connected:
      return strong_connectivity(g);
    case EnumFilter::normal:
      return strong_connectivity(g) && normality_test(g);
  }
  return false;
}

}  // namespace

Digraph directed_cycle(std::size_t n) {
  require(n >= 2, "directed_cycle needs n >= 2");
  std::vector<Arc> arcs;
  for (Vertex v = 0; v < n; ++v) arcs.push_back({v, (v + 1) % n});
  return Digraph(n, std::move(arcs));
}

Digraph complete(std::size_t n) {
  require(n >= 1, "complete needs n >= 1");
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v) arcs.push_back({u, v});
  return Digraph(n, std::move(arcs));
}

Digraph complete_bipartite(std::size_t a, std::size_t b) {
  require(a >= 1 && b >= 1, "complete_bipartite needs both sides nonempty");
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) add_edge(arcs, u, v);
  return Digraph(a + b, std::move(arcs));
}

Digraph path(std::size_t n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Arc> arcs;
  for (Vertex v = 0; v + 1 < n; ++v) add_edge(arcs, v, v + 1);
  return Digraph(n, std::move(arcs));
}

Digraph hypercube(std::size_t k) {
  require(k >= 1 && k <= 16, "hypercube needs 1 <= k <= 16");
  const std::size_t n = std::size_t{1} << k;
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (std::size_t bit = 0; bit < k; ++bit) arcs.push_back({u, u ^ (std::size_t{1} << bit)});
  return Digraph(n, std::move(arcs));
}

Digraph petersen() { return kneser_odd_graph(3); }

Digraph kneser_odd_graph(std::size_t k) {
  require(k >= 2 && k <= 8, "kneser_odd_graph needs 2 <= k <= 8");
  const std::size_t ground = 2 * k - 1;
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t mask = 0; mask < (1U << ground); ++mask)
    if (static_cast<std::size_t>(std::popcount(mask)) == k - 1) subsets.push_back(mask);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < subsets.size(); ++u)
    for (Vertex v = 0; v < subsets.size(); ++v)
      if (u != v && (subsets[u] & subsets[v]) == 0) arcs.push_back({u, v});
  return Digraph(subsets.size(), std::move(arcs));
}

Digraph circulant(std::size_t n, const std::vector<std::size_t>& connections) {
  require(n >= 2, "circulant needs n >= 2");
  std::vector<std::size_t> s = connections;
  std::sort(s.begin(), s.end());
  require(std::adjacent_find(s.begin(), s.end()) == s.end(), "circulant connection set has repeats");
  for (std::size_t c : s) require(c >= 1 && c < n, "circulant connections must lie in 1..n-1");
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (std::size_t c : s) arcs.push_back({u, (u + c) % n});
  return Digraph(n, std::move(arcs));
}

Digraph paley_tournament(std::size_t q) {
  require(is_prime(q) && q % 4 == 3, "paley_tournament needs a prime q with q = 3 mod 4");
  std::vector<std::size_t> squares;
  for (std::size_t x = 1; x < q; ++x) squares.push_back(x * x % q);
  std::sort(squares.begin(), squares.end());
  squares.erase(std::unique(squares.begin(), squares.end()), squares.end());
  return circulant(q, squares);
}

Digraph tensor_lift(const Digraph& inner, std::size_t m) {
  require(m >= 2, "tensor_lift needs m >= 2");
  std::vector<Arc> arcs;
  for (const Arc& a : inner.arcs())
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) arcs.push_back({a.from * m + i, a.to * m + j});
  return Digraph(inner.order() * m, std::move(arcs));
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {
      "directed_cycle", "complete",       "complete_bipartite", "path",   "hypercube",
      "petersen",       "kneser_odd_graph", "circulant",        "paley_tournament"};
  return names;
}

Digraph generate(const FamilySpec& spec) {
  std::string name = spec.family;
  std::replace(name.begin(), name.end(), '-', '_');
  const auto& p = spec.params;
  auto arity = [&](std::size_t k) {
    require(p.size() == k, name + " takes " + std::to_string(k) + " parameter(s), got " + std::to_string(p.size()));
  };
  std::optional<Digraph> g;
  if (name == "directed_cycle") {
    arity(1);
    g = directed_cycle(p[0]);
  } else if (name == "complete") {
    arity(1);
    g = complete(p[0]);
  } else if (name == "complete_bipartite") {
    arity(2);
    g = complete_bipartite(p[0], p[1]);
  } else if (name == "path") {
    arity(1);
    g = path(p[0]);
  } else if (name == "hypercube") {
    arity(1);
    g = hypercube(p[0]);
  } else if (name == "petersen") {
    arity(0);
    g = petersen();
  } else if (name == "kneser_odd_graph") {
    arity(1);
    g = kneser_odd_graph(p[0]);
  } else if (name == "circulant") {
    require(!p.empty(), "circulant takes n followed by the connection set");
    g = circulant(p[0], std::vector<std::size_t>(p.begin() + 1, p.end()));
  } else if (name == "paley_tournament") {
    arity(1);
    g = paley_tournament(p[0]);
  } else {
    throw GeneratorError("unknown family: " + spec.family);
  }
  if (spec.lift) return tensor_lift(*g, *spec.lift);
  return std::move(*g);
}

Digraph digraph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Arc> arcs;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      if ((mask >> bit) & 1U) arcs.push_back({u, v});
      ++bit;
    }
  }
  return Digraph(n, std::move(arcs));
}

std::vector<std::uint64_t> enumerate_masks(std::size_t n, const EnumerationOptions& opts) {
  require(n >= 1, "enumeration needs n >= 1");
  const std::size_t pairs = pair_count(n);
  require(pairs < 63, "enumeration supports at most 8 vertices");
  const std::uint64_t total = std::uint64_t{1} << pairs;
  std::vector<std::uint64_t> accepted;

  if (!opts.sample) {
    require(n <= opts.exhaustive_cap,
            "exhaustive enumeration capped at n = " + std::to_string(opts.exhaustive_cap) + "; pass a sample size");
    for (std::uint64_t mask = 0; mask < total; ++mask)
      if (passes(digraph_from_mask(n, mask), opts.filter)) accepted.push_back(mask);
    return accepted;
  }

  require(n <= opts.sampled_cap, "sampled enumeration capped at n = " + std::to_string(opts.sampled_cap));
  // Distinct masks drawn uniformly until enough pass the filter.
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, total - 1);
  std::unordered_set<std::uint64_t> seen;
  const std::size_t want = *opts.sample;
  while (accepted.size() < want && seen.size() < total) {
    const std::uint64_t mask = dist(rng);
    if (!seen.insert(mask).second) continue;
    if (passes(digraph_from_mask(n, mask), opts.filter)) accepted.push_back(mask);
  }
  std::sort(accepted.begin(), accepted.end());
  return accepted;
}

std::size_t enumerate_digraphs(std::size_t n, const EnumerationOptions& opts,
                               const std::function<bool(const Digraph&)>& visit) {
  std::size_t visited = 0;
  for (std::uint64_t mask : enumerate_masks(n, opts)) {
    ++visited;
    if (!visit(digraph_from_mask(n, mask))) break;
  }
  return visited;
}

std::vector<Digraph> enumerate_digraphs(std::size_t n, const EnumerationOptions& opts) {
  std::vector<Digraph> out;
  enumerate_digraphs(n, opts, [&](const Digraph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

}  // namespace dgexcess
