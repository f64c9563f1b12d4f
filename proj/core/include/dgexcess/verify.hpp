#pragma once

// Batch verification: runs the property suites over enumerated small
// digraphs and the generated families and reports one result per criterion.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dgexcess/digraph.hpp"

namespace dgexcess {

struct VerifyOptions {
  /// Orders 1..max_n are covered; with `sample`, order max_n is sampled
  /// (that many strongly connected digraphs) and smaller orders are exhaustive.
  std::size_t max_n = 4;
  std::optional<std::size_t> sample;
  std::uint64_t seed = 20240101;
  std::size_t jobs = 1;
  /// Random subset systems per digraph for the generalized projection sums.
  std::size_t subset_systems = 20;
  /// Largest generated family member included.
  std::size_t family_max_order = 64;
  bool include_families = true;
  double weighted_tol = 1e-9;
  double numeric_tol = 1e-8;
  /// Counterexamples kept per criterion.
  std::size_t max_counterexamples = 5;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  /// Message plus the offending digraph as an edgelist.
  std::vector<std::string> counterexamples;
  double seconds = 0.0;
  std::string detail;

  bool passed() const { return checked > 0 && failures == 0; }
};

struct VerifyResult {
  std::vector<CriterionResult> criteria;
  std::size_t digraphs = 0;
  std::size_t normal_digraphs = 0;
  std::size_t family_members = 0;
  double seconds = 0.0;

  bool passed() const;
  const CriterionResult& criterion(int id) const;
};

/// The named families used by the harness, up to `max_order` vertices, with
/// a label each.
std::vector<std::pair<std::string, Digraph>> verification_families(std::size_t max_order);

/// Throws std::invalid_argument when max_n exceeds the enumeration caps.
VerifyResult run_verification(const VerifyOptions& opts);

/// Pass/fail summary, one line per criterion, then counterexamples.
std::string format_verify_result(const VerifyResult& r);

}  // namespace dgexcess
