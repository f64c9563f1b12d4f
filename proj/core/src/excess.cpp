#include "dgexcess/excess.hpp"

#include <algorithm>

namespace dgexcess {

LayerProducts::LayerProducts(const DistanceStructure& s, PowerCache& cache, std::size_t d_hat) {
  const std::size_t n = s.n;
  const Rational inv_n(1, static_cast<unsigned long>(n));
  table_.assign(s.diameter + 1, std::vector<Rational>(d_hat + 1, Rational(0)));
  for (std::size_t i = 0; i <= d_hat; ++i) {
    const IntMatrix& ai = cache.power(i);
    std::vector<Integer> sums(s.diameter + 1, 0);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) sums[s.dist(u, v)] += ai(u, v);
    for (std::size_t k = 0; k <= s.diameter; ++k) table_[k][i] = Rational(sums[k]) * inv_n;
  }
}

Rational LayerProducts::with(std::size_t k, const RationalPoly& p) const {
  Rational sum = 0;
  const auto& row = table_.at(k);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) sum += p.coeffs()[i] * row.at(i);
  return sum;
}

Rational simple_excess(const DeltaProfile& profile, std::size_t d, std::size_t diameter) {
  if (d > diameter) return Rational(0);
  const Rational& dp = profile.delta_prime[d];
  return dp * dp / profile.delta[d];
}

Rational spectral_excess(const PredistanceBasis& basis, std::size_t d) { return basis.norms2.at(d); }

WeightedLayers weighted_layers(const HoffmanMatrix& h, const DistanceStructure& s, PowerCache& cache) {
  const std::size_t n = s.n;
  WeightedLayers w;
  w.exact = h.is_exact();
  if (w.exact) {
    std::vector<Rational> td(s.diameter + 1, Rational(0));
    std::vector<Rational> tdp(s.diameter + 1, Rational(0));
    for (std::size_t k = 0; k <= s.diameter; ++k) {
      const IntMatrix& ak = cache.power(k);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
          if (s.dist(u, v) != k) continue;
          const Rational& x = (*h.exact)(u, v);
          td[k] += x * x;
          tdp[k] += x * ak(u, v);
        }
      }
    }
    const Rational n_q(static_cast<unsigned long>(n));
    for (std::size_t k = 0; k <= s.diameter; ++k) {
      w.tilde_delta.emplace_back(Rational(td[k] / n_q));
      w.tilde_delta_prime.emplace_back(Rational(tdp[k] / n_q));
    }
    return w;
  }
  hp::PrecisionScope scope(h.numeric.rows() > 0 ? h.numeric(0, 0).digits() : hp::default_digits());
  std::vector<hp::Real> td(s.diameter + 1);
  std::vector<hp::Real> tdp(s.diameter + 1);
  for (std::size_t k = 0; k <= s.diameter; ++k) {
    const IntMatrix& ak = cache.power(k);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (s.dist(u, v) != k) continue;
        const hp::Real& x = h.numeric(u, v);
        td[k] += x * x;
        tdp[k] += x * hp::Real(ak(u, v));
      }
    }
  }
  const hp::Real n_r(static_cast<long>(n));
  for (std::size_t k = 0; k <= s.diameter; ++k) {
    w.tilde_delta.emplace_back(td[k] / n_r);
    w.tilde_delta_prime.emplace_back(tdp[k] / n_r);
  }
  return w;
}

Quantity weighted_excess(const WeightedLayers& w, std::size_t d, std::size_t diameter) {
  if (d > diameter) return Quantity(Rational(0));
  const Quantity& td = w.tilde_delta[d];
  const Quantity& tdp = w.tilde_delta_prime[d];
  if (td.exact && tdp.exact) {
    if (is_zero(*td.exact)) throw std::domain_error("weighted delta vanishes at d");
    return Quantity(Rational(*tdp.exact * *tdp.exact / *td.exact));
  }
  if (td.numeric.is_zero()) throw std::domain_error("weighted delta vanishes at d");
  return Quantity(tdp.numeric * tdp.numeric / td.numeric);
}

namespace {

// <A_k, P_j(A)>^2 / delta_j in substituted form: <A_k, monic_j>^2 / eps_j.
Rational projection_term(const LayerProducts& lp, const PredistanceBasis& basis, std::size_t k, std::size_t j) {
  const Rational a = lp.with(k, basis.monic[j]);
  return a * a / basis.norms2[j];
}

}  // namespace

ProjectionSum wdr_projection_sum(const LayerProducts& lp, const PredistanceBasis& basis, const DeltaProfile& profile) {
  ProjectionSum out;
  out.total = 0;
  for (std::size_t k = 0; k <= lp.diameter(); ++k) {
    out.per_k.push_back(projection_term(lp, basis, k, k));
    out.per_k_bound.push_back(out.per_k.back() <= profile.delta[k]);
    out.total += out.per_k.back();
  }
  return out;
}

ProjectionSum upper_projection_sum(const LayerProducts& lp, const PredistanceBasis& basis,
                                   const DeltaProfile& profile) {
  ProjectionSum out;
  out.total = 0;
  const std::size_t diameter = lp.diameter();
  for (std::size_t k = 0; k <= diameter; ++k) {
    Rational row = 0;
    for (std::size_t j = k; j <= diameter; ++j) row += projection_term(lp, basis, k, j);
    out.per_k.push_back(row);
    out.per_k_bound.push_back(row <= profile.delta[k]);
    out.total += row;
  }
  return out;
}

Rational generalized_projection_sum(const LayerProducts& lp, const PredistanceBasis& basis, const DeltaProfile& profile,
                                    const std::vector<std::vector<std::size_t>>& subsets, SubsetVariant variant) {
  const std::size_t diameter = lp.diameter();
  if (subsets.size() != diameter + 1) {
    throw SubsetSystemError("expected " + std::to_string(diameter + 1) + " subsets, got " +
                            std::to_string(subsets.size()));
  }
  Rational total = 0;
  for (std::size_t k = 0; k <= diameter; ++k) {
    const auto& sk = subsets[k];
    if (sk.empty()) throw SubsetSystemError("subset S_" + std::to_string(k) + " is empty");
    if (variant == SubsetVariant::ii && std::find(sk.begin(), sk.end(), k) == sk.end()) {
      throw SubsetSystemError("subset S_" + std::to_string(k) + " does not contain " + std::to_string(k));
    }
    for (std::size_t j : sk) {
      if (j > diameter) throw SubsetSystemError("subset index " + std::to_string(j) + " exceeds the diameter");
      if (variant == SubsetVariant::ii) {
        total += projection_term(lp, basis, k, j);
      } else {
        // c_k^2 <A_j, monic_k>^2 / delta_j
        const Rational a = lp.with(j, basis.monic[k]);
        total += basis.scale2[k] * a * a / profile.delta[j];
      }
    }
  }
  return total;
}

QNorm q_norm_check(const PredistanceBasis& basis, std::size_t d, std::size_t n) {
  QNorm q;
  q.value = basis.q_norm2(d);
  q.equals_n = q.value == Rational(static_cast<unsigned long>(n));
  return q;
}

}  // namespace dgexcess
