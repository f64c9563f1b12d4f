#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dgexcess/exact.hpp"
#include "dgexcess/hp.hpp"

namespace dgexcess {

/// Dense univariate polynomial, coefficients stored lowest degree first.
/// Trailing zero coefficients are dropped, so the zero polynomial has no
/// coefficients and degree -1.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }

  static Polynomial monomial(std::size_t k) {
    std::vector<T> c(k + 1, T(0));
    c[k] = T(1);
    return Polynomial(std::move(c));
  }

  /// x - root
  static Polynomial linear_factor(const T& root) { return Polynomial(std::vector<T>{-root, T(1)}); }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero_poly() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
  const T& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }

  /// Horner evaluation in any ring that the coefficients convert into.
  template <class U, class Conv>
  U evaluate(const U& x, Conv&& conv) const {
    U acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) {
      acc *= x;
      acc += conv(c_[k]);
    }
    return acc;
  }

  T operator()(const T& x) const {
    return evaluate(x, [](const T& c) { return c; });
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }

  Polynomial& operator*=(const T& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * T(static_cast<long>(k));
    return Polynomial(std::move(d));
  }

  Polynomial monic() const {
    Polynomial p = *this;
    if (!p.c_.empty()) {
      const T lead = p.c_.back();
      for (auto& x : p.c_) x /= lead;
    }
    return p;
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

using RationalPoly = Polynomial<Rational>;
using RealPoly = Polynomial<hp::Real>;
using ComplexPoly = Polynomial<hp::Complex>;

/// Quotient and remainder of a / b over a field.
template <class T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& a, const Polynomial<T>& b) {
  if (b.is_zero_poly()) throw std::domain_error("polynomial division by zero");
  std::vector<T> rem = a.coeffs();
  const long db = b.degree();
  const long da = a.degree();
  if (da < db) return {Polynomial<T>{}, a};
  std::vector<T> quot(static_cast<std::size_t>(da - db + 1), T(0));
  const T& lead = b.leading();
  for (long k = da - db; k >= 0; --k) {
    const T q = rem[static_cast<std::size_t>(k + db)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial<T>(std::move(quot)), Polynomial<T>(std::move(rem))};
}

/// Synthetic division by (x - root): returns the quotient and the remainder p(root).
template <class T>
std::pair<Polynomial<T>, T> deflate(const Polynomial<T>& p, const T& root) {
  const auto& c = p.coeffs();
  if (c.empty()) return {Polynomial<T>{}, T(0)};
  std::vector<T> q(c.size() - 1, T(0));
  T carry = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    q[k] = carry;
    carry = c[k] + carry * root;
  }
  return {Polynomial<T>(std::move(q)), carry};
}

/// Monic greatest common divisor over Q.
RationalPoly gcd(RationalPoly a, RationalPoly b);

/// Square-free part m / gcd(m, m'), monic.
RationalPoly squarefree_part(const RationalPoly& p);

/// Yun's square-free factorization: factors[i] collects the roots of
/// multiplicity i + 1 (each factor monic and square-free, possibly constant 1).
std::vector<RationalPoly> squarefree_factorization(const RationalPoly& p);

RealPoly to_real(const RationalPoly& p);
ComplexPoly to_complex(const RealPoly& p);

}  // namespace dgexcess
