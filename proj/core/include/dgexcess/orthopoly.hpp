#pragma once

// Orthogonal polynomials for the trace inner product: pre-distance
// polynomials (exact and from the spectrum), the conjugation polynomial and
// the Hoffman polynomial.

#include <optional>
#include <vector>

#include "dgexcess/digraph.hpp"
#include "dgexcess/linalg.hpp"

namespace dgexcess {

struct PredistanceBasis {
  /// Monic pre-distance polynomials 0..D_hat.
  std::vector<RationalPoly> monic;
  /// ||monic[k]||^2, the numbers eps_k.
  std::vector<Rational> norms2;
  /// c_k^2 with P_k = c_k * monic[k]; c_k^2 = delta_k / eps_k for k <= D and
  /// 1 above the diameter.
  std::vector<Rational> scale2;
  /// Partial sums Q_k = monic[0] + ... + monic[k].
  std::vector<RationalPoly> q_partial;
  RationalPoly minimal;

  std::size_t d_hat() const { return monic.size() - 1; }
  /// ||Q_k||^2 = eps_0 + ... + eps_k.
  Rational q_norm2(std::size_t k) const;
};

class OrthopolyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

PredistanceBasis predistance_polynomials(const KrylovGram& gram, const DeltaProfile& profile);
/// Throws DigraphError when g is not strongly connected.
PredistanceBasis predistance_polynomials(const Digraph& g);

/// (1/n) sum_i m_i p(l_i) conj(q(l_i)) for real polynomials p and q. Throws
/// OrthopolyError when the imaginary residue exceeds 1e-8 * scale.
hp::Real spectral_inner_product(const RealPoly& p, const RealPoly& q, const Spectrum& spec);

struct NumericPredistance {
  std::vector<RealPoly> monic;
  std::vector<hp::Real> norms2;
};

/// Pre-distance polynomials from the spectrum alone; meaningful for normal
/// digraphs. Throws OrthopolyError on a spectrum that is not closed under
/// conjugation.
NumericPredistance spectral_predistance(const Spectrum& spec);

/// f with f(l) = conj(l) on every distinct eigenvalue (Lagrange). Returns x
/// itself for a real spectrum. Throws OrthopolyError on coincident values.
ComplexPoly conjugation_polynomial(const Spectrum& spec);

/// H = n S / S(lambda0).
struct HoffmanPolynomial {
  std::optional<RationalPoly> exact;
  RealPoly numeric;

  bool is_exact() const { return exact.has_value(); }
};

HoffmanPolynomial hoffman_polynomial(const RationalPoly& minimal, const PerronValue& lambda0, std::size_t n);

/// H(A), exact when H is.
struct HoffmanMatrix {
  std::optional<ExactMatrix> exact;
  RealMatrix numeric;

  bool is_exact() const { return exact.has_value(); }
  /// Entry as a Quantity.
  Quantity at(std::size_t u, std::size_t v) const;
};

HoffmanMatrix hoffman_matrix(const HoffmanPolynomial& h, PowerCache& cache);

}  // namespace dgexcess
