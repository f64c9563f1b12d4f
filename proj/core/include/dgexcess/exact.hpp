#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "dgexcess/hp.hpp"

namespace dgexcess {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q" with the denominator always present ("6/1").
std::string to_fraction_string(const Rational& q);
/// Shortest human form ("6", "2/3").
std::string to_plain_string(const Rational& q);
/// Parses "p/q" or "p".
Rational parse_rational(const std::string& text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }

/// Number of decimal digits of |z| (1 for zero).
std::size_t decimal_digits(const Integer& z);

/// A value that is exact when `exact` is set and otherwise only known to
/// `numeric`'s precision. When exact, `numeric` is its rounding.
struct Quantity {
  std::optional<Rational> exact;
  hp::Real numeric;

  Quantity() = default;
  explicit Quantity(const Rational& q) : exact(q), numeric(q) {}
  explicit Quantity(hp::Real x) : numeric(std::move(x)) {}

  bool is_exact() const { return exact.has_value(); }
  /// Exact "p/q" string or a 12-digit decimal.
  std::string to_string() const;
  std::string to_plain_string() const;
};

Quantity operator-(const Quantity& a, const Quantity& b);

/// a == b exactly when both are exact; otherwise |a-b| <= tol * max(1, |b|).
bool approx_equal(const Quantity& a, const Quantity& b, double tol);
/// a <= b exactly when both are exact; otherwise a <= b + tol * max(1, |b|).
bool approx_less_equal(const Quantity& a, const Quantity& b, double tol);

}  // namespace dgexcess
