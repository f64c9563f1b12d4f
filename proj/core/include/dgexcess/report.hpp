#pragma once

// Everything known about one digraph, gathered for serialization.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dgexcess/analysis.hpp"
#include "dgexcess/classify.hpp"

namespace dgexcess {

struct SpectrumEntry {
  std::string re;
  std::string im;
  std::size_t multiplicity = 0;
};

struct CrossCheck {
  std::string name;
  bool agree = true;
  std::string detail;
};

/// Spectrum-route pre-distance coefficients and f(A) against the exact route.
struct SpectralRouteCheck {
  /// max over coefficients of |numeric - exact| / max(1, |exact|)
  hp::Real coefficient_error;
  /// max entry of |f(A) - A^T|
  hp::Real conjugation_error;
};

/// Precondition: strongly connected and normal.
SpectralRouteCheck spectral_route_check(Analysis& a);

/// (pi_0 / n)^2 delta_D, exact when lambda0 is an integer.
Quantity pi0_excess(Analysis& a);

struct ConnectedReport {
  bool normal = false;
  bool regular = false;
  std::optional<std::size_t> degree;
  bool symmetric = false;
  bool geodetic = false;
  bool bipartite = false;
  std::size_t diameter = 0;
  std::size_t d = 0;
  std::size_t d_hat = 0;
  bool d_informational = false;
  CycleLength girth = CycleLength::infinite();
  CycleLength odd_girth = CycleLength::infinite();
  CycleLength odd_girth_spectral = CycleLength::infinite();

  RationalPoly minimal_polynomial;
  std::vector<Rational> delta;
  std::vector<Rational> delta_prime;
  std::vector<Rational> eps;
  Rational simple_excess;
  Rational spectral_excess;
  bool d_greater_than_diameter = false;

  ProjectionSum wdr_sum;
  ProjectionSum upper_sum;
  QNorm q_norm;

  std::optional<Spectrum> spectrum;
  std::optional<Quantity> pi0;
  std::optional<HoffmanPolynomial> hoffman;
  std::optional<Quantity> weighted_excess;
  std::vector<Quantity> tilde_delta;
  std::vector<Quantity> tilde_delta_prime;

  /// wdr (direct), wdr-projection, wdr-upper, dr-direct, dr (simple), dr-weighted,
  /// geodetic-dr, gog; absent entries failed to compute (see errors).
  std::vector<Verdict> verdicts;
  std::optional<std::set<Branch>> trichotomy;
  std::string trichotomy_error;

  std::vector<CrossCheck> crosschecks;

  const Verdict* verdict(const std::string& property) const;
};

struct AnalysisReport {
  std::size_t n = 0;
  std::size_t arc_count = 0;
  std::string format;
  std::string hash;
  bool strongly_connected = false;
  std::optional<ConnectedReport> connected;

  double weighted_tol = 1e-9;
  double cluster_tol = 0.0;
  unsigned configured_digits = 0;
  unsigned working_digits = 0;
  /// Computation failures that did not stop the report.
  std::vector<std::string> errors;

  /// False when some cross-check disagreed or an error was recorded.
  bool consistent() const;
};

struct ReportOptions {
  std::string format = "edgelist";
  /// Input hash; computed from the arc list when empty.
  std::string hash;
  AnalysisOptions analysis;
};

/// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

AnalysisReport full_report(const Digraph& g, const ReportOptions& opts = {});

}  // namespace dgexcess
