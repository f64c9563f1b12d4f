#pragma once

// High-precision real and complex scalars on top of MPFR.
//
// Every value carries its own precision. New values take the calling
// thread's default precision (see PrecisionScope); arithmetic results take
// the larger precision of their operands. Nothing here touches process-wide
// state, so independent analyses may run on different threads with
// different precisions.

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace dgexcess::hp {

/// Decimal digits given to values created on this thread.
unsigned default_digits();
void set_default_digits(unsigned digits);

/// Digits requested through DGEXCESS_PRECISION, or 50 when unset/invalid.
unsigned configured_digits();

/// RAII override of this thread's default digits.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

class Real {
 public:
  Real();
  Real(long v);  // NOLINT(google-explicit-constructor): integer literals
  Real(int v) : Real(static_cast<long>(v)) {}  // NOLINT
  explicit Real(double v);
  explicit Real(const mpz_class& v);
  explicit Real(const mpq_class& v);
  /// Parses a decimal string ("1.25", "-3e-4").
  static Real parse(const std::string& text);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
  unsigned digits() const;
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits = 12) const;
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

 private:
  explicit Real(mpfr_prec_t bits, int /*tag*/);
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real hypot(const Real& a, const Real& b);
Real pow(const Real& x, unsigned long e);
Real log10(const Real& x);
/// 10^-k at the default precision.
Real epsilon_digits(long k);
std::ostream& operator<<(std::ostream& os, const Real& x);

struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(Real r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(long r) : re(r) {}  // NOLINT
  Complex(int r) : re(r) {}   // NOLINT

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

Complex conj(const Complex& z);
Real abs(const Complex& z);
Real norm(const Complex& z);  // |z|^2
bool is_zero(const Complex& z);
inline bool is_zero(const Real& x) { return x.is_zero(); }

}  // namespace dgexcess::hp
