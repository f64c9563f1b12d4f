#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace oracle {

QMat adjacency(const dgexcess::Digraph& g) {
  const std::size_t n = g.order();
  QMat a(n, std::vector<Q>(n, 0));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (g.has_arc(u, v)) a[u][v] = 1;
  return a;
}

QMat multiply(const QMat& a, const QMat& b) {
  const std::size_t n = a.size();
  QMat c(n, std::vector<Q>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

QMat transpose(const QMat& a) {
  QMat t = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) t[i][j] = a[j][i];
  return t;
}

bool is_zero(const QMat& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

Q inner(const QMat& c, const QMat& d) {
  Q s = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) s += c[i][j] * d[i][j];
  return s / Q(static_cast<long>(c.size()));
}

bool strongly_connected(const dgexcess::Digraph& g) {
  const std::size_t n = g.order();
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<bool> seen(n, false);
    std::function<void(std::size_t)> visit = [&](std::size_t u) {
      seen[u] = true;
      for (std::size_t v = 0; v < n; ++v)
        if (g.has_arc(u, v) && !seen[v]) visit(v);
    };
    visit(s);
    for (bool b : seen)
      if (!b) return false;
  }
  return true;
}

Paths enumerate_paths(const dgexcess::Digraph& g) {
  const std::size_t n = g.order();
  Paths p;
  p.dist.assign(n, std::vector<std::optional<std::size_t>>(n));
  p.count.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<bool> on_path(n, false);
    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t u, std::size_t len) {
      auto& best = p.dist[s][u];
      if (!best || len < *best) {
        best = len;
        p.count[s][u] = 1;
      } else if (len == *best) {
        ++p.count[s][u];
      }
      on_path[u] = true;
      for (std::size_t v = 0; v < n; ++v)
        if (g.has_arc(u, v) && !on_path[v]) walk(v, len + 1);
      on_path[u] = false;
    };
    walk(s, 0);
  }
  for (const auto& row : p.dist)
    for (const auto& d : row)
      if (d && *d > p.diameter) p.diameter = *d;
  return p;
}

std::vector<std::vector<std::size_t>> distances(const dgexcess::Digraph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> dist(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::optional<std::size_t>> d(n);
    std::deque<std::size_t> queue{s};
    d[s] = 0;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < n; ++v) {
        if (g.has_arc(u, v) && !d[v]) {
          d[v] = *d[u] + 1;
          queue.push_back(v);
        }
      }
    }
    for (const auto& x : d) {
      if (!x) throw std::invalid_argument("oracle distances need a strongly connected digraph");
      dist[s].push_back(*x);
    }
  }
  return dist;
}

std::size_t diameter_of(const std::vector<std::vector<std::size_t>>& dist) {
  std::size_t d = 0;
  for (const auto& row : dist)
    for (std::size_t x : row) d = std::max(d, x);
  return d;
}

bool normal(const dgexcess::Digraph& g) {
  const QMat a = adjacency(g);
  const QMat at = transpose(a);
  return multiply(a, at) == multiply(at, a);
}

namespace {

// Polynomial and matrix kept side by side through the elimination.
struct Pair {
  std::vector<Q> poly;
  QMat mat;
};

Pair axpy(const Pair& x, const Q& s, const Pair& y) {
  Pair r = x;
  if (r.poly.size() < y.poly.size()) r.poly.resize(y.poly.size(), 0);
  for (std::size_t i = 0; i < y.poly.size(); ++i) r.poly[i] += s * y.poly[i];
  for (std::size_t i = 0; i < r.mat.size(); ++i)
    for (std::size_t j = 0; j < r.mat.size(); ++j) r.mat[i][j] += s * y.mat[i][j];
  return r;
}

}  // namespace

Gram gram_schmidt(const dgexcess::Digraph& g) {
  const std::size_t n = g.order();
  const QMat a = adjacency(g);
  QMat power(n, std::vector<Q>(n, 0));
  for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
  std::vector<Pair> basis;
  Gram out;
  for (std::size_t k = 0;; ++k) {
    Pair r{std::vector<Q>(k + 1, 0), power};
    r.poly[k] = 1;
    const Pair raw = r;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      r = axpy(r, -inner(raw.mat, basis[j].mat) / out.norms2[j], basis[j]);
    }
    if (is_zero(r.mat)) {
      out.minimal = r.poly;
      return out;
    }
    out.norms2.push_back(inner(r.mat, r.mat));
    out.monic.push_back(r.poly);
    basis.push_back(r);
    power = multiply(power, a);
    if (k > n) throw std::logic_error("oracle Gram-Schmidt did not terminate");
  }
}

std::pair<Q, Q> excesses(const dgexcess::Digraph& g) {
  if (!normal(g)) throw std::invalid_argument("oracle excesses expect a normal digraph");
  const Gram gs = gram_schmidt(g);
  const std::size_t d = gs.monic.size() - 1;
  const Paths p = enumerate_paths(g);
  const std::size_t n = g.order();
  Q simple = 0;
  if (d <= p.diameter) {
    // delta_d and delta'_d from the enumerated shortest paths: a walk of
    // length d into a vertex at distance d is a shortest path.
    Q delta = 0;
    Q delta_prime = 0;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (p.dist[u][v] == d) {
          delta += 1;
          delta_prime += static_cast<long>(p.count[u][v]);
        }
    delta /= static_cast<long>(n);
    delta_prime /= static_cast<long>(n);
    simple = delta_prime * delta_prime / delta;
  }
  return {simple, gs.norms2[d]};
}

Q q_norm2(const dgexcess::Digraph& g) {
  const Gram gs = gram_schmidt(g);
  Q s = 0;
  for (const auto& e : gs.norms2) s += e;
  return s;
}

bool distance_matrices_polynomial(const dgexcess::Digraph& g) {
  const Gram gs = gram_schmidt(g);
  const auto dist = distances(g);
  const std::size_t diameter = diameter_of(dist);
  const std::size_t n = g.order();
  // Closure of span(A_0..A_D) under products needs deg m = D + 1.
  if (gs.monic.size() != diameter + 1) return false;
  // Matrices of the orthogonal basis, rebuilt from the polynomials.
  const QMat a = adjacency(g);
  std::vector<QMat> mats;
  for (const auto& poly : gs.monic) {
    QMat m(n, std::vector<Q>(n, 0));
    QMat power(n, std::vector<Q>(n, 0));
    for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
    for (const auto& c : poly) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] += c * power[i][j];
      power = multiply(power, a);
    }
    mats.push_back(m);
  }
  for (std::size_t k = 0; k <= diameter; ++k) {
    QMat r(n, std::vector<Q>(n, 0));
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (dist[u][v] == k) r[u][v] = 1;
    // Project onto the first k + 1 basis elements; the rest must vanish.
    const QMat layer = r;
    for (std::size_t j = 0; j <= k; ++j) {
      const Q c = inner(layer, mats[j]) / gs.norms2[j];
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) r[u][v] -= c * mats[j][u][v];
    }
    if (!is_zero(r)) return false;
  }
  return true;
}

bool dr_by_counting(const dgexcess::Digraph& g) {
  if (!strongly_connected(g)) return false;
  const auto dist = distances(g);
  const std::size_t n = g.order();
  std::vector<std::optional<std::vector<std::size_t>>> seen(diameter_of(dist) + 1);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t k = dist[u][v];
      if (k == 0) continue;
      std::vector<std::size_t> counts(k + 2, 0);
      for (std::size_t w = 0; w < n; ++w)
        if (g.has_arc(v, w)) ++counts[dist[u][w]];
      if (!seen[k]) {
        seen[k] = counts;
      } else if (*seen[k] != counts) {
        return false;
      }
    }
  }
  return true;
}

std::size_t odd_girth(const dgexcess::Digraph& g) {
  const std::size_t n = g.order();
  std::size_t best = 0;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::optional<std::size_t>> dist(2 * n);
    std::deque<std::size_t> queue{2 * s};
    dist[2 * s] = 0;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      const std::size_t u = x / 2;
      for (std::size_t v = 0; v < n; ++v) {
        if (!g.has_arc(u, v)) continue;
        const std::size_t y = 2 * v + (1 - x % 2);
        if (!dist[y]) {
          dist[y] = *dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
    if (dist[2 * s + 1] && (best == 0 || *dist[2 * s + 1] < best)) best = *dist[2 * s + 1];
  }
  return best;
}

}  // namespace oracle
