#include "dgexcess/hp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace dgexcess::hp {
namespace {

constexpr unsigned kFallbackDigits = 50;

thread_local unsigned tls_digits = 0;

mpfr_prec_t digits_to_bits(unsigned digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

mpfr_prec_t default_bits() { return digits_to_bits(default_digits()); }

mpfr_prec_t max_bits(const Real& a, const Real& b) { return std::max(a.bits(), b.bits()); }

}  // namespace

unsigned configured_digits() {
  static const unsigned digits = [] {
    const char* env = std::getenv("DGEXCESS_PRECISION");
    if (env == nullptr) return kFallbackDigits;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 16 || v > 100000) return kFallbackDigits;
    return static_cast<unsigned>(v);
  }();
  return digits;
}

unsigned default_digits() { return tls_digits == 0 ? configured_digits() : tls_digits; }

void set_default_digits(unsigned digits) { tls_digits = digits; }

PrecisionScope::PrecisionScope(unsigned digits) : saved_(tls_digits) { tls_digits = digits; }

PrecisionScope::~PrecisionScope() { tls_digits = saved_; }

Real::Real(mpfr_prec_t bits, int) { mpfr_init2(v_, bits); }

Real::Real() : Real(default_bits(), 0) { mpfr_set_zero(v_, 1); }

Real::Real(long v) : Real(default_bits(), 0) { mpfr_set_si(v_, v, MPFR_RNDN); }

Real::Real(double v) : Real(default_bits(), 0) { mpfr_set_d(v_, v, MPFR_RNDN); }

Real::Real(const mpz_class& v) : Real(default_bits(), 0) { mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN); }

Real::Real(const mpq_class& v) : Real(default_bits(), 0) { mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN); }

Real Real::parse(const std::string& text) {
  Real r;
  if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("not a decimal number: " + text);
  }
  return r;
}

Real::Real(const Real& other) : Real(other.bits(), 0) { mpfr_set(v_, other.v_, MPFR_RNDN); }

Real::Real(Real&& other) noexcept : Real(MPFR_PREC_MIN, 0) { mpfr_swap(v_, other.v_); }

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    if (bits() < other.bits()) mpfr_set_prec(v_, other.bits());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

unsigned Real::digits() const {
  return static_cast<unsigned>(std::floor((bits() - 8) / 3.3219280948873623));
}

std::string Real::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", std::max(0, digits - 1), v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

namespace {

// Widens `x` in place so that it can hold a result of `bits` precision.
void widen(Real& x, mpfr_prec_t bits) {
  if (x.bits() < bits) mpfr_prec_round(x.get(), bits, MPFR_RNDN);
}

}  // namespace

Real& Real::operator+=(const Real& o) {
  widen(*this, o.bits());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  widen(*this, o.bits());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  widen(*this, o.bits());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  widen(*this, o.bits());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real operator+(const Real& a, const Real& b) {
  Real r(max_bits(a, b), 0);
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(max_bits(a, b), 0);
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(max_bits(a, b), 0);
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(max_bits(a, b), 0);
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a) {
  Real r(a.bits(), 0);
  mpfr_neg(r.v_, a.v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_) != 0) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Real abs(const Real& x) {
  Real r = x;
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  Real r = x;
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real hypot(const Real& a, const Real& b) {
  Real r = a.bits() >= b.bits() ? a : b;
  mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, unsigned long e) {
  Real r = x;
  mpfr_pow_ui(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

Real log10(const Real& x) {
  Real r = x;
  mpfr_log10(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real epsilon_digits(long k) {
  Real r(10L);
  mpfr_pow_si(r.get(), r.get(), -k, MPFR_RNDN);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.to_string(17); }

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  Real i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  const Real den = o.re * o.re + o.im * o.im;
  Real r = (re * o.re + im * o.im) / den;
  Real i = (im * o.re - re * o.im) / den;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex conj(const Complex& z) { return {z.re, -z.im}; }

Real abs(const Complex& z) { return hypot(z.re, z.im); }

Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }

bool is_zero(const Complex& z) { return z.re.is_zero() && z.im.is_zero(); }

}  // namespace dgexcess::hp
