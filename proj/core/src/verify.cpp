#include "dgexcess/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "dgexcess/analysis.hpp"
#include "dgexcess/classify.hpp"
#include "dgexcess/generators.hpp"
#include "dgexcess/io.hpp"
#include "dgexcess/report.hpp"

namespace dgexcess {
namespace {

constexpr int kCriteria = 9;

const std::array<const char*, kCriteria> kNames = {
    "WDR characterization by projection sums",
    "simple spectral excess theorem",
    "weighted spectral excess theorem",
    "geodetic spectral excess theorem",
    "named excess values",
    "Perron product identity on DR members",
    "odd girth suite",
    "spectral route and conjugation polynomial",
    "generator contracts",
};

using Clock = std::chrono::steady_clock;

struct Tally {
  struct Entry {
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::vector<std::pair<std::size_t, std::string>> examples;
    double seconds = 0.0;
  };
  std::array<Entry, kCriteria> c;
  std::size_t digraphs = 0;
  std::size_t normal = 0;
  std::size_t families = 0;
  std::size_t cap = 5;

  void check(int id, bool ok, std::size_t item, const std::string& label, const std::string& message,
             const Digraph& g) {
    Entry& e = c[static_cast<std::size_t>(id - 1)];
    ++e.checked;
    if (ok) return;
    ++e.failures;
    if (e.examples.size() < cap) e.examples.emplace_back(item, label + ": " + message + "\n" + write_edgelist(g));
  }

  void merge(const Tally& o) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i].checked += o.c[i].checked;
      c[i].failures += o.c[i].failures;
      c[i].seconds += o.c[i].seconds;
      c[i].examples.insert(c[i].examples.end(), o.c[i].examples.begin(), o.c[i].examples.end());
    }
    digraphs += o.digraphs;
    normal += o.normal;
    families += o.families;
  }
};

// Accumulates wall time into one criterion for the lifetime of the object.
class Stopwatch {
 public:
  Stopwatch(Tally& t, int id) : t_(t), id_(id), start_(Clock::now()) {}
  ~Stopwatch() {
    t_.c[static_cast<std::size_t>(id_ - 1)].seconds +=
        std::chrono::duration<double>(Clock::now() - start_).count();
  }
  Stopwatch(const Stopwatch&) = delete;
  Stopwatch& operator=(const Stopwatch&) = delete;

 private:
  Tally& t_;
  int id_;
  Clock::time_point start_;
};

std::string frac(const Rational& q) { return to_plain_string(q); }

struct Context {
  const VerifyOptions& opts;
  Tally& t;
  std::size_t item;
  const std::string& label;
  const Digraph& g;

  void check(int id, bool ok, const std::string& message) const { t.check(id, ok, item, label, message, g); }

  // Runs `body`; an exception counts as one failed check of criterion `id`.
  void guarded(int id, const std::function<void()>& body) const {
    Stopwatch sw(t, id);
    try {
      body();
    } catch (const std::exception& e) {
      check(id, false, std::string("exception: ") + e.what());
    }
  }
};

std::vector<std::vector<std::size_t>> random_system(std::mt19937_64& rng, std::size_t diameter, bool contain_k) {
  std::vector<std::vector<std::size_t>> sys(diameter + 1);
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<std::size_t> pick(0, diameter);
  for (std::size_t k = 0; k <= diameter; ++k) {
    for (std::size_t j = 0; j <= diameter; ++j)
      if ((contain_k && j == k) || coin(rng)) sys[k].push_back(j);
    if (sys[k].empty()) sys[k].push_back(pick(rng));
  }
  return sys;
}

std::string system_string(const std::vector<std::vector<std::size_t>>& sys) {
  std::string s;
  for (std::size_t k = 0; k < sys.size(); ++k) {
    s += (k ? " " : "") + std::string("S_") + std::to_string(k) + "={";
    for (std::size_t i = 0; i < sys[k].size(); ++i) s += (i ? "," : "") + std::to_string(sys[k][i]);
    s += "}";
  }
  return s;
}

void check_digraph(const Context& ctx, std::uint64_t seed) {
  const VerifyOptions& opts = ctx.opts;
  Analysis a(ctx.g, AnalysisOptions{opts.weighted_tol, std::nullopt});
  const std::size_t n = ctx.g.order();
  const Rational n_q(static_cast<unsigned long>(n));
  bool wdr = false;
  bool dr = false;
  const bool normal = a.normal();
  ++ctx.t.digraphs;
  if (normal) ++ctx.t.normal;

  ctx.guarded(1, [&] {
    wdr = wdr_direct(a.distances()).first.decision;
    const auto& lp = a.layer_products();
    const auto& basis = a.basis();
    const auto& deltas = a.deltas();
    const std::size_t diameter = a.diameter();
    const ProjectionSum s32 = wdr_projection_sum(lp, basis, deltas);
    const ProjectionSum s35 = upper_projection_sum(lp, basis, deltas);
    ctx.check(1, s32.total <= n_q, "projection sum " + frac(s32.total) + " exceeds n");
    ctx.check(1, (s32.total == n_q) == wdr,
              "projection sum " + frac(s32.total) + " vs n = " + std::to_string(n) + " but wdr_direct = " +
                  (wdr ? "true" : "false"));
    ctx.check(1, s35.total <= n_q, "upper projection sum " + frac(s35.total) + " exceeds n");
    ctx.check(1, (s35.total == n_q) == wdr,
              "upper projection sum " + frac(s35.total) + " but wdr_direct = " + (wdr ? "true" : "false"));
    bool per_k = true;
    for (bool b : s32.per_k_bound) per_k = per_k && b;
    for (bool b : s35.per_k_bound) per_k = per_k && b;
    ctx.check(1, per_k, "a per-k projection exceeds delta_k");

    std::vector<std::vector<std::size_t>> diag(diameter + 1);
    std::vector<std::vector<std::size_t>> upper(diameter + 1);
    for (std::size_t k = 0; k <= diameter; ++k) {
      diag[k] = {k};
      for (std::size_t j = k; j <= diameter; ++j) upper[k].push_back(j);
    }
    ctx.check(1, generalized_projection_sum(lp, basis, deltas, diag, SubsetVariant::ii) == s32.total,
              "S_k = {k} does not reproduce the projection sum");
    ctx.check(1, generalized_projection_sum(lp, basis, deltas, upper, SubsetVariant::ii) == s35.total,
              "S_k = {k..D} does not reproduce the upper projection sum");

    std::mt19937_64 rng(seed);
    for (std::size_t r = 0; r < opts.subset_systems; ++r) {
      const auto sys = random_system(rng, diameter, true);
      for (SubsetVariant v : {SubsetVariant::i, SubsetVariant::ii}) {
        const Rational total = generalized_projection_sum(lp, basis, deltas, sys, v);
        const std::string tag = std::string(v == SubsetVariant::i ? "variant i" : "variant ii") + " with " +
                                system_string(sys) + " gives " + frac(total);
        ctx.check(1, total <= n_q, tag + " > n");
        ctx.check(1, (total == n_q) == wdr, tag + " but wdr_direct = " + (wdr ? "true" : "false"));
      }
      // Variant i without k in S_k: the bound still holds and equality still forces WDR.
      const auto loose = random_system(rng, diameter, false);
      const Rational total = generalized_projection_sum(lp, basis, deltas, loose, SubsetVariant::i);
      ctx.check(1, total <= n_q, "variant i with " + system_string(loose) + " gives " + frac(total) + " > n");
      ctx.check(1, total != n_q || wdr, "variant i with " + system_string(loose) + " reaches n on a non-WDR digraph");
    }
  });

  ctx.guarded(2, [&] {
    const auto [verdict, table] = dr_direct(a.distances());
    dr = verdict.decision;
    const Rational simple = a.simple_excess();
    const Rational spectral = a.spectral_excess();
    ctx.check(2, simple <= spectral, "simple excess " + frac(simple) + " > spectral excess " + frac(spectral));
    if (normal) {
      ctx.check(2, (simple == spectral) == dr,
                "simple excess " + frac(simple) + ", spectral excess " + frac(spectral) + ", dr_direct = " +
                    (dr ? "true" : "false"));
    }
    ctx.check(2, dr == (normal && wdr_direct(a.distances()).first.decision), "dr_direct differs from normal and WDR");
  });

  ctx.guarded(7, [&] {
    const CycleLength go = a.girths().odd_girth;
    const CycleLength spectral = odd_girth_spectral(power_traces(ctx.g, n));
    ctx.check(7, spectral == go, "spectral odd girth " + spectral.to_string() + " vs " + go.to_string());
    if (go.is_finite()) {
      ctx.check(7, go.value() <= 2 * a.diameter() + 1,
                "odd girth " + go.to_string() + " > 2D+1 with D = " + std::to_string(a.diameter()));
      if (normal && go.value() >= 2 * a.d() + 1) {
        ctx.check(7, dr && go.value() == 2 * a.d() + 1,
                  "odd girth " + go.to_string() + " >= 2d+1 with d = " + std::to_string(a.d()) +
                      " but not DR with equality");
      }
    }
    if (normal) {
      try {
        const auto branches = trichotomy(a);
        ctx.check(7, !branches.empty(), "empty trichotomy");
      } catch (const ClassifyError& e) {
        ctx.check(7, false, e.what());
      }
    }
  });

  if (!normal) return;

  ctx.guarded(3, [&] {
    const Quantity weighted = a.weighted_excess();
    const Quantity spectral(a.spectral_excess());
    const bool regular = a.regularity().regular;
    const bool equal = approx_equal(weighted, spectral, opts.weighted_tol);
    ctx.check(3, equal == dr,
              "weighted excess " + weighted.to_plain_string() + ", spectral excess " + spectral.to_plain_string() +
                  ", dr_direct = " + (dr ? "true" : "false"));
    ctx.check(3, approx_less_equal(weighted, spectral, opts.weighted_tol),
              "weighted excess " + weighted.to_plain_string() + " > spectral excess " + spectral.to_plain_string());
    if (regular) {
      ctx.check(3, weighted.is_exact() && *weighted.exact == a.simple_excess(),
                "regular digraph with weighted excess " + weighted.to_plain_string() + " != simple excess " +
                    frac(a.simple_excess()));
    }
  });

  ctx.guarded(4, [&] {
    const QNorm q = q_norm_check(a.basis(), a.d(), n);
    ctx.check(4, q.equals_n == (dr && a.geodetic()),
              "||Q_d||^2 = " + frac(q.value) + ", dr_direct = " + (dr ? "true" : "false") +
                  ", geodetic = " + (a.geodetic() ? "true" : "false"));
  });

  if (dr) {
    ctx.guarded(6, [&] {
      const Quantity lhs = pi0_excess(a);
      const Quantity rhs(a.simple_excess());
      ctx.check(6, approx_equal(lhs, rhs, opts.weighted_tol),
                "(pi0/n)^2 delta_D = " + lhs.to_plain_string() + " vs simple excess " + rhs.to_plain_string());
      if (a.spectrum().lambda0.exact) ctx.check(6, lhs.is_exact(), "integral lambda0 but inexact product");
    });
  }

  ctx.guarded(8, [&] {
    const SpectralRouteCheck src = spectral_route_check(a);
    const hp::Real tol(opts.numeric_tol);
    ctx.check(8, src.coefficient_error < tol,
              "spectral pre-distance coefficients off by " + src.coefficient_error.to_string(3));
    ctx.check(8, src.conjugation_error < tol, "max |f(A) - A^T| = " + src.conjugation_error.to_string(3));
  });
}

struct FamilyMember {
  std::string label;
  Digraph g;
  bool dr = false;
  bool bipartite = false;
  bool gog = false;
  bool tournament = false;
  std::optional<std::size_t> diameter;
};

std::vector<FamilyMember> family_members(std::size_t max_order) {
  std::vector<FamilyMember> out;
  auto add = [&](std::string label, const std::function<Digraph()>& make, std::size_t order, FamilyMember flags) {
    if (order > max_order) return;
    flags.label = std::move(label);
    flags.g = make();
    out.push_back(std::move(flags));
  };
  const FamilyMember plain{"", Digraph(1, {}), false, false, false, false, std::nullopt};
  auto with = [&](bool dr, bool bip, bool gog = false) {
    FamilyMember f = plain;
    f.dr = dr;
    f.bipartite = bip;
    f.gog = gog;
    return f;
  };
  for (std::size_t n = 2; n <= 12; ++n) {
    FamilyMember f = with(true, n % 2 == 0);
    f.diameter = n - 1;
    add("directed_cycle(" + std::to_string(n) + ")", [n] { return directed_cycle(n); }, n, f);
  }
  for (std::size_t n = 2; n <= 8; ++n) {
    add("complete(" + std::to_string(n) + ")", [n] { return complete(n); }, n, with(true, n == 2, n >= 3));
  }
  for (auto [x, y] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {3, 3}, {4, 4}, {2, 3}, {1, 3}, {2, 4}}) {
    add("complete_bipartite(" + std::to_string(x) + "," + std::to_string(y) + ")",
        [x, y] { return complete_bipartite(x, y); }, x + y, with(x == y, true));
  }
  for (std::size_t n = 2; n <= 8; ++n) {
    add("path(" + std::to_string(n) + ")", [n] { return path(n); }, n, with(n == 2, true));
  }
  for (std::size_t k = 1; k <= 6; ++k) {
    FamilyMember f = with(true, true);
    f.diameter = k;
    add("hypercube(" + std::to_string(k) + ")", [k] { return hypercube(k); }, std::size_t{1} << k, f);
  }
  {
    FamilyMember f = with(true, false, true);
    f.diameter = 2;
    add("petersen", [] { return petersen(); }, 10, f);
  }
  for (std::size_t k = 2; k <= 4; ++k) {
    FamilyMember f = with(true, false, true);
    f.diameter = k - 1;
    const std::size_t order = k == 2 ? 3 : (k == 3 ? 10 : 35);
    add("kneser_odd_graph(" + std::to_string(k) + ")", [k] { return kneser_odd_graph(k); }, order, f);
  }
  const std::vector<std::pair<std::size_t, std::vector<std::size_t>>> circulants = {
      {7, {1, 2, 4}}, {6, {1, 2}}, {8, {1, 2, 5}}, {9, {1, 3, 7}}, {10, {1, 4}}, {12, {1, 5, 7}}};
  for (const auto& [n, s] : circulants) {
    std::string label = "circulant(" + std::to_string(n);
    for (std::size_t c : s) label += "," + std::to_string(c);
    label += ")";
    add(label, [n = n, s = s] { return circulant(n, s); }, n, plain);
  }
  for (std::size_t q : {3, 7, 11, 19, 23, 31, 43, 47, 59}) {
    FamilyMember f = plain;
    f.tournament = true;
    add("paley_tournament(" + std::to_string(q) + ")", [q] { return paley_tournament(q); }, q, f);
  }
  for (std::size_t gg = 3; gg <= 5; ++gg) {
    for (std::size_t m = 2; m <= 3; ++m) {
      FamilyMember f = with(true, gg % 2 == 0);
      f.diameter = gg;
      add("tensor_lift(directed_cycle(" + std::to_string(gg) + ")," + std::to_string(m) + ")",
          [gg, m] { return tensor_lift(directed_cycle(gg), m); }, gg * m, f);
    }
  }
  add("tensor_lift(petersen,2)", [] { return tensor_lift(petersen(), 2); }, 20, plain);
  add("tensor_lift(hypercube(3),2)", [] { return tensor_lift(hypercube(3), 2); }, 16, with(false, true));
  return out;
}

void check_family_contracts(const FamilyMember& f, Tally& t, std::size_t item) {
  const Context ctx{VerifyOptions{}, t, item, f.label, f.g};
  ctx.guarded(9, [&] {
    Analysis a(f.g);
    ctx.check(9, a.strongly_connected(), "not strongly connected");
    if (f.dr) {
      const bool dr = dr_direct(a.distances()).first.decision;
      ctx.check(9, dr, "advertised distance-regular, dr_direct disagrees");
    }
    if (f.bipartite) ctx.check(9, a.bipartite(), "advertised bipartite, bipartite_test disagrees");
    if (f.gog) ctx.check(9, generalized_odd_graph_check(a).decision, "advertised generalized odd graph");
    if (f.diameter) {
      ctx.check(9, a.diameter() == *f.diameter,
                "diameter " + std::to_string(a.diameter()) + ", advertised " + std::to_string(*f.diameter));
    }
    if (f.tournament) {
      bool ok = true;
      for (Vertex u = 0; u < f.g.order(); ++u)
        for (Vertex v = u + 1; v < f.g.order(); ++v) ok = ok && (f.g.has_arc(u, v) != f.g.has_arc(v, u));
      ctx.check(9, ok, "advertised tournament");
    }
    if (f.label.rfind("circulant", 0) == 0 || f.label.rfind("paley", 0) == 0) {
      ctx.check(9, a.normal(), "circulant is not normal");
    }
  });
}

void check_lift_contracts(Tally& t, std::size_t item) {
  const std::vector<std::pair<std::string, Digraph>> inners = {
      {"directed_cycle(3)", directed_cycle(3)}, {"complete(4)", complete(4)},
      {"path(3)", path(3)}, {"paley_tournament(7)", paley_tournament(7)}};
  for (const auto& [label, inner] : inners) {
    for (std::size_t m = 2; m <= 3; ++m) {
      const Digraph lifted = tensor_lift(inner, m);
      const std::string name = "tensor_lift(" + label + "," + std::to_string(m) + ")";
      const Context ctx{VerifyOptions{}, t, item, name, lifted};
      ctx.guarded(9, [&] {
        ctx.check(9, lifted.order() == inner.order() * m, "order is not n*m");
        bool degrees = true;
        for (Vertex v = 0; v < lifted.order(); ++v) {
          degrees = degrees && lifted.out_neighbors(v).size() == m * inner.out_neighbors(v / m).size() &&
                    lifted.in_neighbors(v).size() == m * inner.in_neighbors(v / m).size();
        }
        ctx.check(9, degrees, "degrees are not multiplied by m");
      });
    }
  }
}

void check_named_values(Tally& t, std::size_t item) {
  struct Named {
    std::string label;
    Digraph g;
    Rational simple;
    Rational spectral;
  };
  std::vector<Named> named = {{"path(3)", path(3), Rational(2, 3), Rational(8, 9)},
                              {"petersen", petersen(), Rational(6), Rational(6)},
                              {"complete(4)", complete(4), Rational(3), Rational(3)},
                              {"hypercube(3)", hypercube(3), Rational(36), Rational(36)}};
  for (std::size_t n = 3; n <= 12; ++n) {
    named.push_back({"directed_cycle(" + std::to_string(n) + ")", directed_cycle(n), Rational(1), Rational(1)});
  }
  for (const auto& x : named) {
    const Context ctx{VerifyOptions{}, t, item, x.label, x.g};
    ctx.guarded(5, [&] {
      Analysis a(x.g);
      const Rational simple = a.simple_excess();
      const Rational spectral = a.spectral_excess();
      ctx.check(5, simple == x.simple && spectral == x.spectral,
                "(simple, spectral) = (" + frac(simple) + ", " + frac(spectral) + "), expected (" + frac(x.simple) +
                    ", " + frac(x.spectral) + ")");
    });
  }

  // Geodetic criterion named values.
  struct QNamed {
    std::string label;
    Digraph g;
    Rational value;
    bool equal;
  };
  std::vector<QNamed> qs = {{"petersen", petersen(), Rational(10), true},
                            {"hypercube(3)", hypercube(3), Rational(52), false}};
  for (std::size_t n = 3; n <= 12; ++n) {
    qs.push_back({"directed_cycle(" + std::to_string(n) + ")", directed_cycle(n),
                  Rational(static_cast<unsigned long>(n)), true});
  }
  for (const auto& x : qs) {
    const Context ctx{VerifyOptions{}, t, item, x.label, x.g};
    ctx.guarded(4, [&] {
      Analysis a(x.g);
      const QNorm q = q_norm_check(a.basis(), a.d(), x.g.order());
      ctx.check(4, q.value == x.value && q.equals_n == x.equal && geodetic_dr_check(a).decision == x.equal,
                "||Q_d||^2 = " + frac(q.value) + ", expected " + frac(x.value));
    });
  }

  const Digraph p = petersen();
  const Context ctx{VerifyOptions{}, t, item, "petersen", p};
  ctx.guarded(6, [&] {
    Analysis a(p);
    const Quantity q = pi0_excess(a);
    ctx.check(6, q.is_exact() && *q.exact == 6, "(pi0/n)^2 delta_D = " + q.to_plain_string() + ", expected 6");
  });
}

std::uint64_t item_seed(std::uint64_t seed, std::size_t n, std::uint64_t mask) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(mask),
                    static_cast<std::uint32_t>(mask >> 32)};
  std::array<std::uint64_t, 1> out{};
  seq.generate(reinterpret_cast<std::uint32_t*>(out.data()), reinterpret_cast<std::uint32_t*>(out.data()) + 2);
  return out[0];
}

}  // namespace

bool VerifyResult::passed() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.passed(); });
}

const CriterionResult& VerifyResult::criterion(int id) const { return criteria.at(static_cast<std::size_t>(id - 1)); }

std::vector<std::pair<std::string, Digraph>> verification_families(std::size_t max_order) {
  std::vector<std::pair<std::string, Digraph>> out;
  for (auto& f : family_members(max_order)) out.emplace_back(f.label, f.g);
  return out;
}

VerifyResult run_verification(const VerifyOptions& opts) {
  const auto start = Clock::now();
  EnumerationOptions eo;
  eo.filter = EnumFilter::strongly_connected;
  eo.seed = opts.seed;
  if (opts.max_n < 1) throw std::invalid_argument("max_n must be at least 1");
  if (opts.sample ? opts.max_n > eo.sampled_cap : opts.max_n > eo.exhaustive_cap) {
    throw std::invalid_argument("max_n = " + std::to_string(opts.max_n) + " exceeds the enumeration cap" +
                                (opts.sample ? "" : "; pass --sample"));
  }

  struct Item {
    std::size_t n;
    std::uint64_t mask;
  };
  std::vector<Item> items;
  for (std::size_t n = 1; n <= opts.max_n; ++n) {
    EnumerationOptions e = eo;
    if (opts.sample && n == opts.max_n) e.sample = *opts.sample;
    for (std::uint64_t mask : enumerate_masks(n, e)) items.push_back({n, mask});
  }
  const std::vector<FamilyMember> families = opts.include_families ? family_members(opts.family_max_order)
                                                                   : std::vector<FamilyMember>{};
  // Work units: enumerated digraphs, family members, then the fixed checks.
  const std::size_t fixed = opts.include_families ? 1 : 0;
  const std::size_t total = items.size() + families.size() + fixed;

  const std::size_t jobs = std::max<std::size_t>(1, opts.jobs);
  std::vector<Tally> tallies(jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&](std::size_t w) {
    Tally& t = tallies[w];
    t.cap = opts.max_counterexamples;
    for (std::size_t idx = next++; idx < total; idx = next++) {
      if (idx < items.size()) {
        const Digraph g = digraph_from_mask(items[idx].n, items[idx].mask);
        const std::string label = "n=" + std::to_string(items[idx].n) + " mask=" + std::to_string(items[idx].mask);
        check_digraph(Context{opts, t, idx, label, g}, item_seed(opts.seed, items[idx].n, items[idx].mask));
      } else if (idx < items.size() + families.size()) {
        const FamilyMember& f = families[idx - items.size()];
        ++t.families;
        check_digraph(Context{opts, t, idx, f.label, f.g}, item_seed(opts.seed, f.g.order(), idx));
        check_family_contracts(f, t, idx);
      } else {
        check_named_values(t, idx);
        check_lift_contracts(t, idx);
      }
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (auto& th : threads) th.join();
  }

  Tally all;
  all.cap = opts.max_counterexamples;
  for (const auto& t : tallies) all.merge(t);

  VerifyResult r;
  r.digraphs = all.digraphs;
  r.normal_digraphs = all.normal;
  r.family_members = all.families;
  for (int id = 1; id <= kCriteria; ++id) {
    auto& e = all.c[static_cast<std::size_t>(id - 1)];
    std::sort(e.examples.begin(), e.examples.end());
    CriterionResult c;
    c.id = id;
    c.name = kNames[static_cast<std::size_t>(id - 1)];
    c.checked = e.checked;
    c.failures = e.failures;
    c.seconds = e.seconds;
    for (std::size_t i = 0; i < e.examples.size() && i < opts.max_counterexamples; ++i) {
      c.counterexamples.push_back(e.examples[i].second);
    }
    r.criteria.push_back(std::move(c));
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

std::string format_verify_result(const VerifyResult& r) {
  std::ostringstream out;
  out << "digraphs " << r.digraphs << " (normal " << r.normal_digraphs << ", family members " << r.family_members
      << ")\n";
  for (const auto& c : r.criteria) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2f", c.seconds);
    out << (c.passed() ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << c.checked << " checks, "
        << c.failures << " failures, " << secs << " s\n";
  }
  for (const auto& c : r.criteria) {
    for (const auto& ex : c.counterexamples) out << "counterexample [" << c.id << "] " << ex;
  }
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
  out << (r.passed() ? "verification passed" : "verification FAILED") << " in " << secs << " s\n";
  return out.str();
}

}  // namespace dgexcess
