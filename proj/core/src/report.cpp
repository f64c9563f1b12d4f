#include "dgexcess/report.hpp"

#include <cstdint>
#include <cstdio>

namespace dgexcess {
namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

void add_check(ConnectedReport& c, std::string name, bool agree, std::string detail) {
  c.crosschecks.push_back({std::move(name), agree, std::move(detail)});
}

std::string canonical_edgelist(const Digraph& g) {
  std::string s = std::to_string(g.order()) + " " + std::to_string(g.arc_count()) + "\n";
  for (const Arc& a : g.arcs()) s += std::to_string(a.from) + " " + std::to_string(a.to) + "\n";
  return s;
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SpectralRouteCheck spectral_route_check(Analysis& a) {
  const Spectrum& spec = a.spectrum();
  hp::PrecisionScope scope(spec.digits);
  SpectralRouteCheck out;
  out.coefficient_error = hp::Real(0);
  out.conjugation_error = hp::Real(0);

  const NumericPredistance np = spectral_predistance(spec);
  const PredistanceBasis& basis = a.basis();
  const std::size_t top = std::min(np.monic.size(), basis.monic.size());
  for (std::size_t k = 0; k < top; ++k) {
    const RationalPoly& exact = basis.monic[k];
    const RealPoly& num = np.monic[k];
    const std::size_t len = std::max(exact.coeffs().size(), num.coeffs().size());
    for (std::size_t i = 0; i < len; ++i) {
      const hp::Real e(exact.coeff(i));
      hp::Real scale = hp::abs(e);
      if (scale < hp::Real(1)) scale = hp::Real(1);
      const hp::Real err = hp::abs(num.coeff(i) - e) / scale;
      if (err > out.coefficient_error) out.coefficient_error = err;
    }
  }
  if (np.monic.size() != basis.monic.size()) out.coefficient_error = hp::Real(1);

  const ComplexPoly f = conjugation_polynomial(spec);
  const ComplexMatrix fa = evaluate(f, a.powers());
  const Digraph& g = a.digraph();
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < g.order(); ++v) {
      const hp::Complex target(hp::Real(g.has_arc(v, u) ? 1L : 0L));
      const hp::Real err = hp::abs(fa(u, v) - target);
      if (err > out.conjugation_error) out.conjugation_error = err;
    }
  }
  return out;
}

Quantity pi0_excess(Analysis& a) {
  const Spectrum& spec = a.spectrum();
  const Rational& delta_d = a.deltas().delta.back();
  const auto exact = exact_pi0(a.krylov().minimal, spec.lambda0);
  if (exact) {
    const Rational ratio = *exact / Rational(static_cast<unsigned long>(a.order()));
    return Quantity(Rational(ratio * ratio * delta_d));
  }
  hp::PrecisionScope scope(spec.digits);
  const hp::Real ratio = spec.pi0().re / hp::Real(static_cast<long>(a.order()));
  return Quantity(ratio * ratio * hp::Real(delta_d));
}

const Verdict* ConnectedReport::verdict(const std::string& property) const {
  for (const auto& v : verdicts)
    if (v.property == property) return &v;
  return nullptr;
}

bool AnalysisReport::consistent() const {
  if (!errors.empty()) return false;
  if (!connected) return true;
  for (const auto& c : connected->crosschecks)
    if (!c.agree) return false;
  return true;
}

AnalysisReport full_report(const Digraph& g, const ReportOptions& opts) {
  AnalysisReport r;
  r.n = g.order();
  r.arc_count = g.arc_count();
  r.format = opts.format;
  r.hash = opts.hash.empty() ? fnv1a_hex(canonical_edgelist(g)) : opts.hash;
  r.weighted_tol = opts.analysis.weighted_tol;
  r.configured_digits = hp::default_digits();

  Analysis a(g, opts.analysis);
  r.strongly_connected = a.strongly_connected();
  if (!r.strongly_connected) return r;

  ConnectedReport c;
  c.normal = a.normal();
  c.regular = a.regularity().regular;
  c.degree = a.regularity().degree;
  c.symmetric = g.symmetric();
  c.geodetic = a.geodetic();
  c.bipartite = a.bipartite();
  c.diameter = a.diameter();
  c.d = a.d();
  c.d_hat = a.d_hat();
  c.d_informational = !c.normal;
  c.girth = a.girths().girth;
  c.odd_girth = a.girths().odd_girth;
  c.odd_girth_spectral = odd_girth_spectral(power_traces(g, g.order()));
  c.minimal_polynomial = a.krylov().minimal;
  c.delta = a.deltas().delta;
  c.delta_prime = a.deltas().delta_prime;
  c.eps = a.basis().norms2;
  c.simple_excess = a.simple_excess();
  c.spectral_excess = a.spectral_excess();
  c.d_greater_than_diameter = c.d > c.diameter;
  c.wdr_sum = wdr_projection_sum(a.layer_products(), a.basis(), a.deltas());
  c.upper_sum = upper_projection_sum(a.layer_products(), a.basis(), a.deltas());
  c.q_norm = q_norm_check(a.basis(), c.d, r.n);

  bool numeric_ok = false;
  try {
    c.spectrum = a.spectrum();
    r.cluster_tol = c.spectrum->cluster_tol;
    r.working_digits = c.spectrum->digits;
    c.hoffman = a.hoffman();
    c.weighted_excess = a.weighted_excess();
    c.tilde_delta = a.weighted().tilde_delta;
    c.tilde_delta_prime = a.weighted().tilde_delta_prime;
    numeric_ok = true;
  } catch (const std::exception& e) {
    r.errors.push_back(std::string("numeric spectrum: ") + e.what());
  }

  const auto [wdr, wdr_table] = wdr_direct(a.distances());
  const auto [dr, dr_table] = dr_direct(a.distances());
  c.verdicts.push_back(wdr);
  c.verdicts.push_back(wdr_by_projection_sum(a));
  c.verdicts.push_back(wdr_by_upper_sum(a));
  Verdict dr_named = dr;
  dr_named.property = "dr-direct";
  c.verdicts.push_back(dr_named);
  const Verdict simple_set = dr_by_simple_set(a);
  c.verdicts.push_back(simple_set);
  std::optional<Verdict> weighted_set;
  if (numeric_ok) {
    try {
      weighted_set = dr_by_weighted_set(a, r.weighted_tol);
      c.verdicts.push_back(*weighted_set);
    } catch (const std::exception& e) {
      r.errors.push_back(std::string("weighted excess: ") + e.what());
    }
  }
  const Verdict geodetic_dr = geodetic_dr_check(a);
  c.verdicts.push_back(geodetic_dr);
  c.verdicts.push_back(generalized_odd_graph_check(a));

  if (c.normal) {
    try {
      c.trichotomy = trichotomy(a);
    } catch (const ClassifyError& e) {
      c.trichotomy_error = e.what();
    }
  } else {
    c.trichotomy_error = "not normal";
  }

  // Cross-checks.
  add_check(c, "dr_direct_iff_normal_and_wdr", dr.decision == (c.normal && wdr.decision),
            "dr=" + yes_no(dr.decision) + " normal=" + yes_no(c.normal) + " wdr=" + yes_no(wdr.decision));
  add_check(c, "wdr_projection_iff_direct", c.verdict("wdr")->decision == c.verdicts[1].decision,
            "projection sum " + to_plain_string(c.wdr_sum.total) + " vs n=" + std::to_string(r.n));
  add_check(c, "wdr_upper_iff_direct", c.verdict("wdr")->decision == c.verdicts[2].decision,
            "projection sum " + to_plain_string(c.upper_sum.total) + " vs n=" + std::to_string(r.n));
  const Rational n_q(static_cast<unsigned long>(r.n));
  add_check(c, "projection_sums_at_most_n", c.wdr_sum.total <= n_q && c.upper_sum.total <= n_q, "");
  bool per_k = true;
  for (bool b : c.wdr_sum.per_k_bound) per_k = per_k && b;
  for (bool b : c.upper_sum.per_k_bound) per_k = per_k && b;
  add_check(c, "per_k_bounds", per_k, "");
  add_check(c, "simple_excess_at_most_spectral", c.simple_excess <= c.spectral_excess,
            to_plain_string(c.simple_excess) + " <= " + to_plain_string(c.spectral_excess));
  if (c.normal) {
    add_check(c, "simple_set_iff_dr_direct", simple_set.decision == dr.decision, "");
    if (weighted_set) add_check(c, "weighted_set_iff_dr_direct", weighted_set->decision == dr.decision, "");
    add_check(c, "geodetic_set_iff_dr_and_geodetic", geodetic_dr.decision == (dr.decision && c.geodetic),
              "q_norm2=" + to_plain_string(c.q_norm.value));
  }
  if (c.weighted_excess) {
    const Quantity spectral(c.spectral_excess);
    add_check(c, "weighted_excess_at_most_spectral",
              approx_less_equal(*c.weighted_excess, spectral, r.weighted_tol),
              c.weighted_excess->to_plain_string() + " <= " + spectral.to_plain_string());
    if (c.regular) {
      add_check(c, "weighted_equals_simple_on_regular", approx_equal(*c.weighted_excess, Quantity(c.simple_excess), 0.0),
                c.weighted_excess->to_plain_string());
    }
  }
  add_check(c, "odd_girth_spectral_equals_combinatorial", c.odd_girth_spectral == c.odd_girth,
            c.odd_girth_spectral.to_string() + " vs " + c.odd_girth.to_string());
  if (c.odd_girth.is_finite()) {
    add_check(c, "odd_girth_at_most_2D_plus_1", c.odd_girth.value() <= 2 * c.diameter + 1, "");
    if (c.normal && c.odd_girth.value() >= 2 * c.d + 1) {
      add_check(c, "large_odd_girth_forces_dr", dr.decision && c.odd_girth.value() == 2 * c.d + 1,
                "odd girth " + c.odd_girth.to_string() + ", d=" + std::to_string(c.d));
    }
  }
  if (c.normal) {
    add_check(c, "trichotomy_nonempty", c.trichotomy.has_value(), c.trichotomy_error);
  }
  if (numeric_ok) {
    try {
      c.pi0 = pi0_excess(a);
      if (dr.decision) {
        add_check(c, "pi0_excess_equals_simple_excess", approx_equal(*c.pi0, Quantity(c.simple_excess), r.weighted_tol),
                  c.pi0->to_plain_string() + " vs " + to_plain_string(c.simple_excess));
      }
      if (c.normal) {
        const SpectralRouteCheck src = spectral_route_check(a);
        add_check(c, "spectral_route_coefficients", src.coefficient_error < hp::Real(1e-8),
                  "max relative error " + src.coefficient_error.to_string(3));
        add_check(c, "conjugation_polynomial", src.conjugation_error < hp::Real(1e-8),
                  "max |f(A) - A^T| " + src.conjugation_error.to_string(3));
        add_check(c, "distinct_eigenvalue_count", c.spectrum->clustered_count == c.spectrum->distinct.size(),
                  std::to_string(c.spectrum->clustered_count) + " clustered vs " +
                      std::to_string(c.spectrum->distinct.size()) + " exact");
      }
      const HoffmanMatrix& h = a.hoffman_matrix();
      if (c.regular) {
        bool all_ones = h.is_exact();
        if (all_ones) {
          for (const auto& x : h.exact->data()) all_ones = all_ones && x == 1;
        }
        add_check(c, "hoffman_matrix_is_J", all_ones, "");
      }
      const hp::Real at = c.hoffman->numeric(c.spectrum->lambda0.value);
      const hp::Real n_r(static_cast<long>(r.n));
      add_check(c, "hoffman_at_lambda0_is_n", hp::abs(at - n_r) <= hp::Real(r.weighted_tol) * n_r, at.to_string(12));
    } catch (const std::exception& e) {
      r.errors.push_back(std::string("spectral cross-checks: ") + e.what());
    }
  }
  r.connected = std::move(c);
  return r;
}

}  // namespace dgexcess
