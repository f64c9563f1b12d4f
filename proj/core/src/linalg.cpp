#include "dgexcess/linalg.hpp"

#include <algorithm>

namespace dgexcess {

Rational trace_inner_product(const ExactMatrix& c, const ExactMatrix& d) {
  if (c.rows() != d.rows() || c.cols() != d.cols() || !c.square()) {
    throw std::invalid_argument("trace_inner_product: dimension mismatch");
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) sum += c(i, j) * d(i, j);
  sum /= Rational(static_cast<unsigned long>(c.rows()));
  return sum;
}

Rational trace_inner_product(const IntMatrix& c, const IntMatrix& d) {
  if (c.rows() != d.rows() || c.cols() != d.cols() || !c.square()) {
    throw std::invalid_argument("trace_inner_product: dimension mismatch");
  }
  Integer sum = 0;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) sum += c(i, j) * d(i, j);
  Rational q(sum, Integer(static_cast<unsigned long>(c.rows())));
  q.canonicalize();
  return q;
}

bool normality_test(const Digraph& g) {
  // (A A^T)_{uv} = |N+(u) ∩ N+(v)| and (A^T A)_{uv} = |N-(u) ∩ N-(v)|.
  const std::size_t n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u; v < n; ++v) {
      std::size_t common_out = 0;
      std::size_t common_in = 0;
      for (Vertex w = 0; w < n; ++w) {
        common_out += g.has_arc(u, w) && g.has_arc(v, w);
        common_in += g.has_arc(w, u) && g.has_arc(w, v);
      }
      if (common_out != common_in) return false;
    }
  }
  return true;
}

PowerCache::PowerCache(const Digraph& g) : g_(&g) { powers_.push_back(IntMatrix::identity(g.order())); }

const IntMatrix& PowerCache::power(std::size_t k) {
  const std::size_t n = g_->order();
  while (powers_.size() <= k) {
    const IntMatrix& last = powers_.back();
    IntMatrix next(n, n);
    for (Vertex v = 0; v < n; ++v)
      for (Vertex u = 0; u < n; ++u)
        for (Vertex w : g_->in_neighbors(u)) next(v, u) += last(v, w);
    powers_.push_back(std::move(next));
  }
  return powers_[k];
}

const Rational& PowerCache::gram(std::size_t i, std::size_t j) {
  if (i < j) std::swap(i, j);
  if (gram_.size() <= i) gram_.resize(i + 1);
  if (gram_[i].size() <= j) gram_[i].resize(j + 1);
  auto& slot = gram_[i][j];
  if (!slot) {
    const IntMatrix& a = power(i);
    const IntMatrix& b = power(j);
    slot = trace_inner_product(a, b);
  }
  return *slot;
}

std::size_t PowerCache::magnitude_digits(std::size_t k) {
  power(k);
  std::size_t digits = 1;
  for (std::size_t p = 0; p <= k; ++p)
    for (const Integer& z : powers_[p].data()) digits = std::max(digits, mpz_sizeinbase(z.get_mpz_t(), 10));
  return digits;
}

std::vector<Integer> power_traces(PowerCache& cache, std::size_t max_exp) {
  std::vector<Integer> t;
  t.reserve(max_exp + 1);
  for (std::size_t k = 0; k <= max_exp; ++k) t.push_back(cache.trace(k));
  return t;
}

std::vector<Integer> power_traces(const Digraph& g, std::size_t max_exp) {
  // Rolling product; nothing beyond the current power is kept.
  const std::size_t n = g.order();
  std::vector<Integer> t{Integer(static_cast<unsigned long>(n))};
  IntMatrix power = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= max_exp; ++k) {
    IntMatrix next(n, n);
    for (Vertex v = 0; v < n; ++v)
      for (Vertex u = 0; u < n; ++u)
        for (Vertex w : g.in_neighbors(u)) next(v, u) += power(v, w);
    power = std::move(next);
    t.push_back(power.trace());
  }
  return t;
}

Rational poly_inner_product(PowerCache& cache, const RationalPoly& p, const RationalPoly& q) {
  Rational sum = 0;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (is_zero(p.coeffs()[i])) continue;
    for (std::size_t j = 0; j < q.coeffs().size(); ++j) sum += p.coeffs()[i] * q.coeffs()[j] * cache.gram(i, j);
  }
  return sum;
}

namespace {

// <x^i, p> using the cached Gram entries.
Rational monomial_inner(PowerCache& cache, std::size_t i, const RationalPoly& p) {
  Rational sum = 0;
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) sum += p.coeffs()[j] * cache.gram(i, j);
  return sum;
}

}  // namespace

KrylovGram krylov_gram_elimination(PowerCache& cache) {
  KrylovGram kg;
  kg.basis.push_back(RationalPoly::constant(Rational(1)));
  kg.norms2.push_back(cache.gram(0, 0));
  for (std::size_t i = 1;; ++i) {
    RationalPoly residual = RationalPoly::monomial(i);
    for (std::size_t k = 0; k < kg.basis.size(); ++k) {
      const Rational coef = monomial_inner(cache, i, kg.basis[k]) / kg.norms2[k];
      if (!is_zero(coef)) residual -= kg.basis[k] * coef;
    }
    Rational norm2 = monomial_inner(cache, i, residual);
    if (is_zero(norm2)) {
      kg.minimal = std::move(residual);
      break;
    }
    kg.basis.push_back(std::move(residual));
    kg.norms2.push_back(std::move(norm2));
  }
  return kg;
}

RationalPoly minimal_polynomial(const Digraph& g) {
  PowerCache cache(g);
  return krylov_gram_elimination(cache).minimal;
}

RationalPoly characteristic_polynomial(PowerCache& cache) {
  const std::size_t n = cache.order();
  const Digraph& g = cache.digraph();
  // Traces up to A^n; powers beyond the cache are rolled rather than stored.
  std::vector<Integer> traces(n + 1);
  IntMatrix rolling;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k <= 16) {
      traces[k] = cache.trace(k);
      continue;
    }
    if (rolling.rows() == 0) rolling = cache.power(k - 1);
    IntMatrix next(n, n);
    for (Vertex v = 0; v < n; ++v)
      for (Vertex u = 0; u < n; ++u)
        for (Vertex w : g.in_neighbors(u)) next(v, u) += rolling(v, w);
    rolling = std::move(next);
    traces[k] = rolling.trace();
  }

  std::vector<Rational> e(n + 1);
  e[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      const Rational term = e[k - i] * Rational(traces[i]);
      if (i % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    e[k] = acc / Rational(static_cast<unsigned long>(k));
  }
  std::vector<Rational> coeffs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) coeffs[n - k] = (k % 2 == 0) ? e[k] : Rational(-e[k]);
  return RationalPoly(std::move(coeffs));
}

std::size_t distinct_eigenvalue_index(const RationalPoly& minimal) {
  return static_cast<std::size_t>(squarefree_part(minimal).degree()) - 1;
}

unsigned working_digits(PowerCache& cache, std::size_t d_hat) {
  const std::size_t mag = cache.magnitude_digits(d_hat + 1);
  const std::size_t n_digits = std::to_string(cache.order()).size();
  return hp::default_digits() + static_cast<unsigned>(2 * mag + n_digits + 10);
}

ExactMatrix evaluate(const RationalPoly& p, PowerCache& cache) {
  const std::size_t n = cache.order();
  ExactMatrix out(n, n);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const Rational& c = p.coeffs()[k];
    if (is_zero(c)) continue;
    const IntMatrix& ak = cache.power(k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!is_zero(ak(i, j))) out(i, j) += c * ak(i, j);
  }
  return out;
}

RealMatrix evaluate(const RealPoly& p, PowerCache& cache) {
  const std::size_t n = cache.order();
  RealMatrix out(n, n);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const hp::Real& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    const IntMatrix& ak = cache.power(k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!is_zero(ak(i, j))) out(i, j) += c * hp::Real(ak(i, j));
  }
  return out;
}

ComplexMatrix evaluate(const ComplexPoly& p, PowerCache& cache) {
  const std::size_t n = cache.order();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const hp::Complex& c = p.coeffs()[k];
    if (hp::is_zero(c)) continue;
    const IntMatrix& ak = cache.power(k);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (is_zero(ak(i, j))) continue;
        const hp::Real entry(ak(i, j));
        out(i, j).re += c.re * entry;
        out(i, j).im += c.im * entry;
      }
    }
  }
  return out;
}

}  // namespace dgexcess
