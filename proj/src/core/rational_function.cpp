#include "rsl/core/rational_function.hpp"

#include "rsl/errors.hpp"

namespace rsl {

RationalFunction RationalFunction::normalize(const XPoly& num, const XPoly& den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) return RationalFunction();
  XPoly n = num;
  XPoly d = den;
  if (d.degree() > 0) {
    const XPoly g = XPoly::gcd(n, d);
    if (g.degree() > 0) {
      n = XPoly::divmod(n, g).first;
      d = XPoly::divmod(d, g).first;
    }
  }
  const BaseScalar& anchor = d.coeff(0).is_zero() ? d.leading() : d.coeffs().front();
  if (!anchor.is_one()) {
    const BaseScalar inv = anchor.inverse();
    n = n.scaled(inv);
    d = d.scaled(inv);
  }
  return RationalFunction(std::move(n), std::move(d));
}

RationalFunction RationalFunction::geometric(const BaseScalar& c, int d) {
  return normalize(XPoly::one(), XPoly::one() - XPoly::monomial(d, c));
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction::normalize(a.num_ + b.num_, a.den_);
  return RationalFunction::normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction::normalize(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
  return RationalFunction::normalize(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::scaled(const BaseScalar& c) const {
  return normalize(num_.scaled(c), den_);
}

bool RationalFunction::cross_equal(const RationalFunction& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

}  // namespace rsl
