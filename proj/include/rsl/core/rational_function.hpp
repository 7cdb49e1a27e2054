#ifndef RSL_CORE_RATIONAL_FUNCTION_HPP
#define RSL_CORE_RATIONAL_FUNCTION_HPP

#include <utility>

#include "rsl/core/xpoly.hpp"

namespace rsl {

// num/den in Q(u)(X), X = q^{-s}, in canonical form:
//   gcd(num, den) = 1,
//   den(0) = 1 when den(0) != 0, otherwise den is monic.
// Two rational functions are equal iff their fields are identical.
class RationalFunction {
 public:
  RationalFunction() : den_(XPoly::one()) {}
  explicit RationalFunction(const XPoly& poly) : num_(poly), den_(XPoly::one()) {}
  explicit RationalFunction(const BaseScalar& c) : num_(c), den_(XPoly::one()) {}

  // rf_normalize. Throws DivisionByZero for a zero denominator.
  static RationalFunction normalize(const XPoly& num, const XPoly& den);
  static RationalFunction one() { return RationalFunction(XPoly::one()); }
  // 1 / (1 - c X^d).
  static RationalFunction geometric(const BaseScalar& c, int d = 1);

  const XPoly& num() const { return num_; }
  const XPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction scaled(const BaseScalar& c) const;

  // Cross-multiplication test, independent of the canonical form.
  bool cross_equal(const RationalFunction& o) const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  RationalFunction(XPoly num, XPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  XPoly num_;
  XPoly den_;
};

}  // namespace rsl

#endif  // RSL_CORE_RATIONAL_FUNCTION_HPP
