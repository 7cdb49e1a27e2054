#ifndef RSL_CORE_BASE_SCALAR_HPP
#define RSL_CORE_BASE_SCALAR_HPP

#include "rsl/core/big_rational.hpp"
#include "rsl/core/half_int.hpp"
#include "rsl/core/upoly.hpp"

namespace rsl {

// Element of Q(u), u = q^{1/2}, kept as num/den with gcd(num, den) = 1 and den
// monic. Equal values have identical fields, so == is structural.
class BaseScalar {
 public:
  BaseScalar() : den_(BigRational(1)) {}
  BaseScalar(long value) : num_(BigRational(value)), den_(BigRational(1)) {}  // NOLINT
  explicit BaseScalar(const BigRational& value);

  // Normalizing constructor. Throws DivisionByZero when den is zero.
  static BaseScalar from_parts(UPoly num, UPoly den);
  // u^k for any integer k.
  static BaseScalar u_power(int k);
  // q^e = u^{2e} for a half-integer e.
  static BaseScalar q_power(HalfInt e);
  static BaseScalar u() { return u_power(1); }
  static BaseScalar q() { return u_power(2); }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  // True when den is a power of u, i.e. the value is a Laurent polynomial.
  bool is_laurent() const { return den_.is_monomial(); }

  BaseScalar operator-() const;
  BaseScalar& operator+=(const BaseScalar& o);
  BaseScalar& operator-=(const BaseScalar& o);
  BaseScalar& operator*=(const BaseScalar& o);
  BaseScalar& operator/=(const BaseScalar& o);
  friend BaseScalar operator+(BaseScalar a, const BaseScalar& b) { return a += b; }
  friend BaseScalar operator-(BaseScalar a, const BaseScalar& b) { return a -= b; }
  friend BaseScalar operator*(BaseScalar a, const BaseScalar& b) { return a *= b; }
  friend BaseScalar operator/(BaseScalar a, const BaseScalar& b) { return a /= b; }

  // Throws DivisionByZero for zero.
  BaseScalar inverse() const;
  BaseScalar pow(int k) const;

  friend bool operator==(const BaseScalar&, const BaseScalar&) = default;

 private:
  BaseScalar(UPoly num, UPoly den, bool normalize);
  void normalize();

  UPoly num_;
  UPoly den_;
};

}  // namespace rsl

#endif  // RSL_CORE_BASE_SCALAR_HPP
