#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include "dgexcess/linalg.hpp"

namespace dgexcess {
namespace {

using hp::Complex;
using hp::Real;

Complex evaluate_complex(const RealPoly& p, const Complex& z) {
  return p.evaluate(z, [](const Real& c) { return Complex(c); });
}

// Double-precision starting points: eigenvalues of the companion matrix.
std::vector<std::complex<double>> companion_seeds(const RationalPoly& f) {
  const auto deg = static_cast<Eigen::Index>(f.degree());
  std::vector<std::complex<double>> seeds;
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(deg, deg);
  bool finite = true;
  for (Eigen::Index i = 0; i < deg; ++i) {
    const double coef = f.coeffs()[static_cast<std::size_t>(i)].get_d();
    finite = finite && std::isfinite(coef);
    c(i, deg - 1) = -coef;
    if (i > 0) c(i, i - 1) = 1.0;
  }
  if (finite) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
    if (es.info() == Eigen::Success) {
      for (Eigen::Index i = 0; i < deg; ++i) seeds.push_back(es.eigenvalues()(i));
    }
  }
  if (seeds.size() != static_cast<std::size_t>(deg)) {
    // Fall back to a circle enclosing all roots (Cauchy bound).
    seeds.clear();
    double bound = 1.0;
    for (const auto& q : f.coeffs()) bound = std::max(bound, 1.0 + std::fabs(q.get_d()));
    if (!std::isfinite(bound)) bound = 1e300;
    for (Eigen::Index i = 0; i < deg; ++i) {
      const double angle = 2.0 * M_PI * (static_cast<double>(i) + 0.25) / static_cast<double>(deg);
      seeds.emplace_back(0.5 * bound * std::cos(angle), 0.5 * bound * std::sin(angle));
    }
  }
  // Coincident seeds stall the Aberth step.
  for (std::size_t i = 0; i < seeds.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(seeds[i] - seeds[j]) < 1e-12) seeds[i] += std::complex<double>(1e-7 * (i + 1), 1e-7);
  return seeds;
}

// All roots of a square-free polynomial, refined by Aberth-Ehrlich iteration.
std::vector<Complex> polish_roots(const RationalPoly& f, unsigned target_digits) {
  const std::size_t deg = static_cast<std::size_t>(f.degree());
  std::vector<Complex> z;
  if (deg == 0) return z;
  if (deg == 1) {
    z.emplace_back(Real(Rational(-f.coeffs()[0] / f.coeffs()[1])));
    return z;
  }
  const RealPoly p = to_real(f);
  const RealPoly dp = p.derivative();
  for (const auto& s : companion_seeds(f)) z.emplace_back(Real(s.real()), Real(s.imag()));

  const Real target = hp::epsilon_digits(static_cast<long>(target_digits));
  const std::size_t max_iter = 200 + 20 * deg;
  std::vector<Real> step(deg);
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    bool done = true;
    for (std::size_t i = 0; i < deg; ++i) {
      const Complex pv = evaluate_complex(p, z[i]);
      if (hp::is_zero(pv)) {
        step[i] = Real(0);
        continue;
      }
      const Complex w = pv / evaluate_complex(dp, z[i]);
      Complex s;
      for (std::size_t j = 0; j < deg; ++j)
        if (j != i) s += Complex(1) / (z[i] - z[j]);
      const Complex corr = w / (Complex(1) - w * s);
      z[i] -= corr;
      Real scale = hp::abs(z[i]);
      if (scale < Real(1)) scale = Real(1);
      step[i] = hp::abs(corr) / scale;
      if (step[i] > target) done = false;
    }
    if (done) return z;
  }
  const Real loose = hp::epsilon_digits(static_cast<long>(target_digits / 2));
  for (const Real& s : step)
    if (s > loose) throw SpectrumError("eigenvalue refinement did not converge");
  return z;
}

// Dominant eigenvalue of A + I by power iteration, minus one.
double perron_estimate(const Digraph& g) {
  const std::size_t n = g.order();
  std::vector<double> x(n, 1.0);
  std::vector<double> y(n);
  double lambda = 0.0;
  for (int iter = 0; iter < 20000; ++iter) {
    double norm = 0.0;
    for (Vertex v = 0; v < n; ++v) {
      y[v] = x[v];
      for (Vertex w : g.out_neighbors(v)) y[v] += x[w];
      norm = std::max(norm, y[v]);
    }
    for (double& t : y) t /= norm;
    const double prev = lambda;
    lambda = norm - 1.0;
    x.swap(y);
    if (iter > 10 && std::fabs(lambda - prev) < 1e-13 * std::max(1.0, lambda)) break;
  }
  return lambda;
}

std::size_t cluster_count(const std::vector<std::complex<double>>& values, double tol) {
  const std::size_t k = values.size();
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(values[i] - values[j]) <= tol) parent[find(i)] = find(j);
  std::size_t roots = 0;
  for (std::size_t i = 0; i < k; ++i) roots += find(i) == i;
  return roots;
}

}  // namespace

hp::Complex Spectrum::pi0() const {
  Complex prod(1);
  for (std::size_t i = 1; i < distinct.size(); ++i) prod *= Complex(lambda0.value) - distinct[i].value;
  return prod;
}

bool Spectrum::conjugate_closed(const hp::Real& tol) const {
  for (const auto& ev : distinct) {
    const Complex c = hp::conj(ev.value);
    const bool found = std::any_of(distinct.begin(), distinct.end(), [&](const Eigenvalue& other) {
      return other.multiplicity == ev.multiplicity && hp::abs(other.value - c) <= tol;
    });
    if (!found) return false;
  }
  return true;
}

Spectrum spectrum(const Digraph& g, const SpectrumOptions& opts) {
  PowerCache cache(g);
  const KrylovGram gram = krylov_gram_elimination(cache);
  return spectrum(cache, gram, opts);
}

Spectrum spectrum(PowerCache& cache, const KrylovGram& gram, const SpectrumOptions& opts) {
  const Digraph& g = cache.digraph();
  const std::size_t n = g.order();
  Spectrum sp;
  sp.n = n;
  // Precision asked for by the caller (a PrecisionScope or the environment).
  const unsigned requested = hp::default_digits();
  sp.digits = opts.digits ? *opts.digits : working_digits(cache, gram.d_hat());
  hp::PrecisionScope scope(sp.digits);

  // Distinct eigenvalues with multiplicities from the square-free
  // factorization of the characteristic polynomial.
  const RationalPoly chi = characteristic_polynomial(cache);
  const auto factors = squarefree_factorization(chi);
  const unsigned target = requested + 10;
  std::vector<Eigenvalue> all;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() < 1) continue;
    for (Complex& z : polish_roots(factors[i], std::min(target, sp.digits - 2))) {
      all.push_back({std::move(z), i + 1});
    }
  }
  const std::size_t expected = static_cast<std::size_t>(squarefree_part(gram.minimal).degree());
  if (all.size() != expected) {
    throw SpectrumError("characteristic and minimal polynomials disagree on the number of distinct eigenvalues");
  }

  const Real snap = hp::epsilon_digits(static_cast<long>(requested));
  for (auto& ev : all) {
    Real scale = hp::abs(ev.value);
    if (scale < Real(1)) scale = Real(1);
    if (hp::abs(ev.value.im) <= snap * scale) ev.value.im = Real(0);
  }
  // Real coefficients: make conjugate partners exact mirrors of each other.
  std::vector<bool> paired(all.size(), false);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].value.im.sign() <= 0) continue;
    const Complex c = hp::conj(all[i].value);
    std::size_t partner = all.size();
    Real best_gap;
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (paired[j] || all[j].value.im.sign() >= 0 || all[j].multiplicity != all[i].multiplicity) continue;
      Real gap = hp::abs(all[j].value - c);
      if (partner == all.size() || gap < best_gap) {
        partner = j;
        best_gap = std::move(gap);
      }
    }
    if (partner == all.size()) throw SpectrumError("non-real eigenvalue without a conjugate partner");
    paired[partner] = true;
    all[partner].value = c;
  }

  // Perron value: the real eigenvalue of largest real part.
  std::size_t best = all.size();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!all[i].value.im.is_zero()) continue;
    if (best == all.size() || all[i].value.re > all[best].value.re) best = i;
  }
  if (best == all.size()) throw SpectrumError("no real eigenvalue found");
  std::swap(all[0], all[best]);
  std::sort(all.begin() + 1, all.end(), [](const Eigenvalue& a, const Eigenvalue& b) {
    if (a.value.re != b.value.re) return a.value.re > b.value.re;
    return a.value.im > b.value.im;
  });

  sp.lambda0.value = all[0].value.re;
  const double rounded = std::round(sp.lambda0.value.to_double());
  if (std::fabs(rounded) < 9.0e15) {
    const Integer r(rounded);
    const Rational at = gram.minimal.evaluate(Rational(r), [](const Rational& c) { return c; });
    if (is_zero(at)) {
      sp.lambda0.exact = r;
      sp.lambda0.value = Real(r);
      all[0].value = Complex(Real(r));
    }
  }
  if (all[0].multiplicity != 1) sp.diagnostics.push_back("Perron value is not simple");
  sp.distinct = std::move(all);
  sp.d_informational = !normality_test(g);

  const double estimate = perron_estimate(g);
  if (std::fabs(estimate - sp.lambda0.value.to_double()) > 1e-6 * std::max(1.0, estimate)) {
    sp.diagnostics.push_back("power iteration Perron estimate " + std::to_string(estimate) +
                             " differs from the polished value " + sp.lambda0.value.to_string(12));
  }

  // Cross-check against clustered double-precision eigenvalues of A.
  std::size_t max_row = 0;
  for (Vertex v = 0; v < n; ++v) max_row = std::max(max_row, g.out_neighbors(v).size());
  sp.cluster_tol = opts.cluster_tol ? *opts.cluster_tol : 1e-8 * static_cast<double>(std::max<std::size_t>(max_row, 1));
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (const Arc& arc : g.arcs()) a(static_cast<Eigen::Index>(arc.from), static_cast<Eigen::Index>(arc.to)) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
  if (es.info() == Eigen::Success) {
    std::vector<std::complex<double>> values(es.eigenvalues().data(), es.eigenvalues().data() + n);
    sp.clustered_count = cluster_count(values, sp.cluster_tol);
    if (sp.clustered_count != sp.distinct.size()) {
      sp.diagnostics.push_back("clustering double-precision eigenvalues at tolerance " + std::to_string(sp.cluster_tol) +
                               " gives " + std::to_string(sp.clustered_count) + " distinct values, exact count is " +
                               std::to_string(sp.distinct.size()));
    }
  } else {
    sp.diagnostics.push_back("double-precision eigenvalue solver failed");
  }
  return sp;
}

std::optional<Rational> exact_pi0(const RationalPoly& minimal, const PerronValue& lambda0) {
  if (!lambda0.exact) return std::nullopt;
  const Rational root(*lambda0.exact);
  const auto [q, rem] = deflate(squarefree_part(minimal), root);
  if (!is_zero(rem)) throw SpectrumError("Perron value is not a root of the minimal polynomial");
  return q(root);
}

HoffmanIngredients hoffman_ingredients(const RationalPoly& m, const PerronValue& lambda0) {
  HoffmanIngredients h;
  if (lambda0.exact) {
    const Rational root(*lambda0.exact);
    auto [s, rem] = deflate(m, root);
    if (!is_zero(rem)) throw SpectrumError("Perron value is not a root of the minimal polynomial");
    h.exact_s_at_lambda0 = s(root);
    h.s = to_real(s);
    h.s_at_lambda0 = Real(*h.exact_s_at_lambda0);
    h.exact_s = std::move(s);
    return h;
  }
  hp::PrecisionScope scope(lambda0.value.digits());
  auto [s, rem] = deflate(to_real(m), lambda0.value);
  Real scale(1);
  for (const auto& c : m.coeffs()) {
    Real a = hp::abs(Real(c)) * hp::pow(hp::abs(lambda0.value) + Real(1), static_cast<unsigned long>(m.degree()));
    if (a > scale) scale = a;
  }
  if (hp::abs(rem) > hp::epsilon_digits(static_cast<long>(hp::configured_digits())) * scale) {
    throw SpectrumError("Perron value is not a root of the minimal polynomial to working precision");
  }
  h.s_at_lambda0 = s(lambda0.value);
  h.s = std::move(s);
  return h;
}

}  // namespace dgexcess
