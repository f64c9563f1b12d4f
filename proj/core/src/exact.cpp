#include "dgexcess/exact.hpp"

#include <stdexcept>

#include "dgexcess/polynomial.hpp"

namespace dgexcess {

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_plain_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("not a rational number: " + text);
  }
  q.canonicalize();
  return q;
}

std::size_t decimal_digits(const Integer& z) {
  if (z == 0) return 1;
  Integer a = abs(z);
  return a.get_str().size();
}

std::string Quantity::to_string() const {
  return exact ? to_fraction_string(*exact) : numeric.to_string(12);
}

std::string Quantity::to_plain_string() const {
  return exact ? dgexcess::to_plain_string(*exact) : numeric.to_string(12);
}

Quantity operator-(const Quantity& a, const Quantity& b) {
  if (a.exact && b.exact) return Quantity(Rational(*a.exact - *b.exact));
  return Quantity(a.numeric - b.numeric);
}

bool approx_equal(const Quantity& a, const Quantity& b, double tol) {
  if (a.exact && b.exact) return *a.exact == *b.exact;
  hp::Real scale = hp::abs(b.numeric);
  if (scale < hp::Real(1)) scale = hp::Real(1);
  return hp::abs(a.numeric - b.numeric) <= hp::Real(tol) * scale;
}

bool approx_less_equal(const Quantity& a, const Quantity& b, double tol) {
  if (a.exact && b.exact) return *a.exact <= *b.exact;
  hp::Real scale = hp::abs(b.numeric);
  if (scale < hp::Real(1)) scale = hp::Real(1);
  return a.numeric <= b.numeric + hp::Real(tol) * scale;
}

RationalPoly gcd(RationalPoly a, RationalPoly b) {
  while (!b.is_zero_poly()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RationalPoly squarefree_part(const RationalPoly& p) {
  if (p.degree() <= 0) return p.monic();
  const RationalPoly g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

std::vector<RationalPoly> squarefree_factorization(const RationalPoly& p) {
  std::vector<RationalPoly> factors;
  if (p.degree() <= 0) return factors;
  const RationalPoly f = p.monic();
  const RationalPoly fp = f.derivative();
  const RationalPoly a0 = gcd(f, fp);
  RationalPoly b = divmod(f, a0).first;
  RationalPoly c = divmod(fp, a0).first;
  RationalPoly d = c - b.derivative();
  while (b.degree() > 0) {
    RationalPoly a = gcd(b, d);
    factors.push_back(a);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
  }
  return factors;
}

RealPoly to_real(const RationalPoly& p) {
  std::vector<hp::Real> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c.emplace_back(q);
  return RealPoly(std::move(c));
}

ComplexPoly to_complex(const RealPoly& p) {
  std::vector<hp::Complex> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return ComplexPoly(std::move(c));
}

}  // namespace dgexcess
