#pragma once

// Exact linear algebra on adjacency matrices: the normalized trace inner
// product <C, D> = tr(C D^T) / n, matrix powers, minimal and characteristic
// polynomials, plus the numeric spectrum (spectrum.cpp).

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dgexcess/digraph.hpp"
#include "dgexcess/exact.hpp"
#include "dgexcess/matrix.hpp"
#include "dgexcess/polynomial.hpp"

namespace dgexcess {

/// (1/n) tr(C D^T). Throws std::invalid_argument on a shape mismatch.
Rational trace_inner_product(const ExactMatrix& c, const ExactMatrix& d);
Rational trace_inner_product(const IntMatrix& c, const IntMatrix& d);

bool normality_test(const Digraph& g);

/// Lazily extended powers A^0, A^1, ... of one digraph's adjacency matrix
/// together with the Gram entries <x^i, x^j> = <A^i, A^j>. Not thread-safe;
/// confine each cache to a single analysis.
class PowerCache {
 public:
  explicit PowerCache(const Digraph& g);
  /// The cache refers to `g`; it must outlive the cache.
  explicit PowerCache(const Digraph&& g) = delete;

  const Digraph& digraph() const { return *g_; }
  std::size_t order() const { return g_->order(); }
  const IntMatrix& power(std::size_t k);
  const Rational& gram(std::size_t i, std::size_t j);
  Integer trace(std::size_t k) { return power(k).trace(); }
  /// Decimal digits of the largest entry among A^0..A^k.
  std::size_t magnitude_digits(std::size_t k);

 private:
  const Digraph* g_;
  std::vector<IntMatrix> powers_;
  std::vector<std::vector<std::optional<Rational>>> gram_;
};

/// tr(A^0), ..., tr(A^max_exp) as exact integers.
std::vector<Integer> power_traces(const Digraph& g, std::size_t max_exp);
std::vector<Integer> power_traces(PowerCache& cache, std::size_t max_exp);

/// Gram-Schmidt on 1, x, x^2, ... under <f, g> = tr(f(A) g(A)^T) / n, run
/// until the first residual of norm zero. That residual is the minimal
/// polynomial; the residuals before it are the monic orthogonal basis.
struct KrylovGram {
  std::vector<RationalPoly> basis;
  std::vector<Rational> norms2;
  RationalPoly minimal;

  std::size_t d_hat() const { return basis.size() - 1; }
};

KrylovGram krylov_gram_elimination(PowerCache& cache);

/// <p, q> = sum_ij p_i q_j <x^i, x^j>.
Rational poly_inner_product(PowerCache& cache, const RationalPoly& p, const RationalPoly& q);

RationalPoly minimal_polynomial(const Digraph& g);

/// det(xI - A) from power traces via Newton's identities.
RationalPoly characteristic_polynomial(PowerCache& cache);

/// Number of distinct eigenvalues minus one, from the square-free part of
/// the minimal polynomial.
std::size_t distinct_eigenvalue_index(const RationalPoly& minimal);

/// Digits for numeric work on this digraph: this thread's default precision plus
/// enough guard digits to absorb cancellation among powers up to A^(d_hat+1).
unsigned working_digits(PowerCache& cache, std::size_t d_hat);

ExactMatrix evaluate(const RationalPoly& p, PowerCache& cache);
RealMatrix evaluate(const RealPoly& p, PowerCache& cache);
ComplexMatrix evaluate(const ComplexPoly& p, PowerCache& cache);

// ---------------------------------------------------------------------------
// Spectrum

struct Eigenvalue {
  hp::Complex value;
  std::size_t multiplicity = 0;
};

/// The Perron value: the real, simple eigenvalue of largest modulus.
struct PerronValue {
  hp::Real value;
  /// Set when the value is certified to be this integer (a rational root of
  /// a monic integer polynomial is an integer).
  std::optional<Integer> exact;
};

struct SpectrumOptions {
  /// Clustering tolerance for the double-precision cross-check; default
  /// 1e-8 * max row sum.
  std::optional<double> cluster_tol;
  /// Working digits; default is the analysis precision.
  std::optional<unsigned> digits;
};

struct Spectrum {
  std::size_t n = 0;
  /// distinct[0] is the Perron value; the rest ordered by decreasing real
  /// then imaginary part.
  std::vector<Eigenvalue> distinct;
  PerronValue lambda0;
  /// Non-normal inputs: d is reported but carries no spectral meaning.
  bool d_informational = false;
  unsigned digits = 0;
  double cluster_tol = 0.0;
  /// Distinct values found by clustering double-precision eigenvalues.
  std::size_t clustered_count = 0;
  std::vector<std::string> diagnostics;

  std::size_t d() const { return distinct.size() - 1; }
  /// prod_{i>=1} (lambda0 - lambda_i)
  hp::Complex pi0() const;
  bool conjugate_closed(const hp::Real& tol) const;
};

class SpectrumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Spectrum spectrum(const Digraph& g, const SpectrumOptions& opts = {});
Spectrum spectrum(PowerCache& cache, const KrylovGram& gram, const SpectrumOptions& opts = {});

/// Exact pi_0 when lambda0 is exact: the square-free part of m with the
/// factor (x - lambda0) removed, evaluated at lambda0.
std::optional<Rational> exact_pi0(const RationalPoly& minimal, const PerronValue& lambda0);

/// S(x) with (x - lambda0) S(x) = m(x), and S(lambda0).
struct HoffmanIngredients {
  std::optional<RationalPoly> exact_s;
  std::optional<Rational> exact_s_at_lambda0;
  RealPoly s;
  hp::Real s_at_lambda0;

  bool is_exact() const { return exact_s.has_value(); }
};

/// Throws SpectrumError when lambda0 is not a root of m to working precision.
HoffmanIngredients hoffman_ingredients(const RationalPoly& m, const PerronValue& lambda0);

}  // namespace dgexcess
