#include "dgexcess/orthopoly.hpp"

namespace dgexcess {
namespace {

using hp::Complex;
using hp::Real;

// Spectral inner product of two value vectors (values at each distinct
// eigenvalue). Checks that the imaginary part cancels.
Real value_inner(const std::vector<Complex>& a, const std::vector<Complex>& b, const Spectrum& spec) {
  Complex sum;
  Real scale(0);
  for (std::size_t i = 0; i < spec.distinct.size(); ++i) {
    const Complex term = a[i] * hp::conj(b[i]) * Complex(Real(static_cast<long>(spec.distinct[i].multiplicity)));
    sum += term;
    scale += hp::abs(term);
  }
  const Real n(static_cast<long>(spec.n));
  if (scale < Real(1)) scale = Real(1);
  if (hp::abs(sum.im) > Real(1e-8) * scale) {
    throw OrthopolyError("spectral inner product has an imaginary part " + (sum.im / n).to_string(6) +
                         "; the spectrum is not closed under conjugation");
  }
  return sum.re / n;
}

std::vector<Complex> values_of(const RealPoly& p, const Spectrum& spec) {
  std::vector<Complex> v;
  v.reserve(spec.distinct.size());
  for (const auto& ev : spec.distinct) v.push_back(p.evaluate(ev.value, [](const Real& c) { return Complex(c); }));
  return v;
}

}  // namespace

Rational PredistanceBasis::q_norm2(std::size_t k) const {
  Rational sum = 0;
  for (std::size_t i = 0; i <= k && i < norms2.size(); ++i) sum += norms2[i];
  return sum;
}

PredistanceBasis predistance_polynomials(const KrylovGram& gram, const DeltaProfile& profile) {
  PredistanceBasis b;
  b.monic = gram.basis;
  b.norms2 = gram.norms2;
  b.minimal = gram.minimal;
  const std::size_t diameter = profile.delta.size() - 1;
  if (diameter > gram.d_hat()) throw OrthopolyError("diameter exceeds the degree of the minimal polynomial minus one");
  RationalPoly q;
  for (std::size_t k = 0; k < b.monic.size(); ++k) {
    if (is_zero(b.norms2[k])) throw OrthopolyError("pre-distance polynomial of degree " + std::to_string(k) + " has norm zero");
    b.scale2.push_back(k <= diameter ? Rational(profile.delta[k] / b.norms2[k]) : Rational(1));
    q += b.monic[k];
    b.q_partial.push_back(q);
  }
  return b;
}

PredistanceBasis predistance_polynomials(const Digraph& g) {
  const DistanceStructure s = distance_structure(g);
  PowerCache cache(g);
  return predistance_polynomials(krylov_gram_elimination(cache), delta_profile(s));
}

Real spectral_inner_product(const RealPoly& p, const RealPoly& q, const Spectrum& spec) {
  return value_inner(values_of(p, spec), values_of(q, spec), spec);
}

NumericPredistance spectral_predistance(const Spectrum& spec) {
  if (!spec.conjugate_closed(hp::epsilon_digits(static_cast<long>(hp::configured_digits() / 2)))) {
    throw OrthopolyError("spectrum is not closed under conjugation");
  }
  hp::PrecisionScope scope(spec.digits);
  NumericPredistance out;
  const std::size_t count = spec.distinct.size();
  std::vector<std::vector<Complex>> values;

  RealPoly p = RealPoly::constant(Real(1));
  std::vector<Complex> v(count, Complex(1));
  for (std::size_t k = 0; k < count; ++k) {
    if (k > 0) {
      // Start from x * P_{k-1} and project out the earlier ones.
      p = RealPoly::monomial(1) * out.monic.back();
      v = values.back();
      for (std::size_t i = 0; i < count; ++i) v[i] *= spec.distinct[i].value;
      for (std::size_t j = 0; j < k; ++j) {
        const Real r = value_inner(v, values[j], spec) / out.norms2[j];
        p -= out.monic[j] * r;
        for (std::size_t i = 0; i < count; ++i) v[i] -= values[j][i] * Complex(r);
      }
    }
    Real norm2 = value_inner(v, v, spec);
    out.monic.push_back(p);
    out.norms2.push_back(std::move(norm2));
    values.push_back(v);
  }
  return out;
}

ComplexPoly conjugation_polynomial(const Spectrum& spec) {
  bool real = true;
  for (const auto& ev : spec.distinct) real = real && ev.value.im.is_zero();
  if (real) return ComplexPoly(std::vector<Complex>{Complex(0), Complex(1)});

  hp::PrecisionScope scope(spec.digits);
  const std::size_t count = spec.distinct.size();
  const Real gap_floor = hp::epsilon_digits(static_cast<long>(hp::configured_digits() / 2));
  ComplexPoly w = ComplexPoly::constant(Complex(1));
  for (const auto& ev : spec.distinct) w = w * ComplexPoly::linear_factor(ev.value);

  ComplexPoly f;
  for (std::size_t j = 0; j < count; ++j) {
    const Complex& lj = spec.distinct[j].value;
    const ComplexPoly basis = deflate(w, lj).first;
    const Complex at = basis.evaluate(lj, [](const Complex& c) { return c; });
    if (hp::abs(at) <= gap_floor) throw OrthopolyError("coincident eigenvalues in Lagrange interpolation");
    f += basis * (hp::conj(lj) / at);
  }
  return f;
}

HoffmanPolynomial hoffman_polynomial(const RationalPoly& minimal, const PerronValue& lambda0, std::size_t n) {
  const HoffmanIngredients ing = hoffman_ingredients(minimal, lambda0);
  HoffmanPolynomial h;
  if (ing.is_exact()) {
    if (is_zero(*ing.exact_s_at_lambda0)) throw OrthopolyError("S(lambda0) vanishes");
    const Rational factor = Rational(static_cast<unsigned long>(n)) / *ing.exact_s_at_lambda0;
    h.exact = *ing.exact_s * factor;
    h.numeric = to_real(*h.exact);
    return h;
  }
  hp::PrecisionScope scope(lambda0.value.digits());
  if (ing.s_at_lambda0.is_zero()) throw OrthopolyError("S(lambda0) vanishes");
  h.numeric = ing.s * (Real(static_cast<long>(n)) / ing.s_at_lambda0);
  return h;
}

Quantity HoffmanMatrix::at(std::size_t u, std::size_t v) const {
  if (exact) return Quantity((*exact)(u, v));
  return Quantity(numeric(u, v));
}

HoffmanMatrix hoffman_matrix(const HoffmanPolynomial& h, PowerCache& cache) {
  HoffmanMatrix m;
  if (h.exact) {
    m.exact = evaluate(*h.exact, cache);
    m.numeric = to_real(*m.exact);
  } else {
    m.numeric = evaluate(h.numeric, cache);
  }
  return m;
}

}  // namespace dgexcess
