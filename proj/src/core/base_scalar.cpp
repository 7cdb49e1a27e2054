#include "rsl/core/base_scalar.hpp"

#include <algorithm>

#include "rsl/errors.hpp"

namespace rsl {

BaseScalar::BaseScalar(const BigRational& value) : num_(value), den_(BigRational(1)) {}

BaseScalar::BaseScalar(UPoly num, UPoly den, bool normalize_now)
    : num_(std::move(num)), den_(std::move(den)) {
  if (normalize_now) normalize();
}

BaseScalar BaseScalar::from_parts(UPoly num, UPoly den) {
  return BaseScalar(std::move(num), std::move(den), true);
}

BaseScalar BaseScalar::u_power(int k) {
  if (k >= 0) return BaseScalar(UPoly::monomial(k), UPoly(BigRational(1)), false);
  return BaseScalar(UPoly(BigRational(1)), UPoly::monomial(-k), false);
}

BaseScalar BaseScalar::q_power(HalfInt e) { return u_power(e.twice()); }

void BaseScalar::normalize() {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = UPoly(BigRational(1));
    return;
  }
  if (den_.is_monomial()) {
    // Only a power of u can be shared with a monomial denominator.
    const int k = std::min(den_.low_degree(), num_.low_degree());
    if (k > 0) {
      num_ = num_.shifted_down(k);
      den_ = den_.shifted_down(k);
    }
  } else {
    const UPoly g = UPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = UPoly::divmod(num_, g).first;
      den_ = UPoly::divmod(den_, g).first;
    }
  }
  if (den_.leading() != 1) {
    const BigRational inv = 1 / den_.leading();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

BaseScalar BaseScalar::operator-() const { return BaseScalar(-num_, den_, false); }

BaseScalar& BaseScalar::operator+=(const BaseScalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else if (den_.is_monomial() && o.den_.is_monomial()) {
    // Both monic powers of u: bring to the larger one.
    const int a = den_.degree();
    const int b = o.den_.degree();
    if (a >= b) {
      num_ += o.num_.shifted_up(a - b);
    } else {
      num_ = num_.shifted_up(b - a) + o.num_;
      den_ = o.den_;
    }
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

BaseScalar& BaseScalar::operator-=(const BaseScalar& o) { return *this += -o; }

BaseScalar& BaseScalar::operator*=(const BaseScalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = BaseScalar();
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

BaseScalar& BaseScalar::operator/=(const BaseScalar& o) { return *this *= o.inverse(); }

BaseScalar BaseScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return BaseScalar(den_, num_, true);
}

BaseScalar BaseScalar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  BaseScalar result(1);
  BaseScalar base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

}  // namespace rsl
