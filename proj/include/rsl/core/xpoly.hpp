#ifndef RSL_CORE_XPOLY_HPP
#define RSL_CORE_XPOLY_HPP

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "rsl/core/base_scalar.hpp"

namespace rsl {

// Dense polynomial in X = q^{-s} over Q(u); coefficient i multiplies X^i.
// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class XPoly {
 public:
  static constexpr int kZeroDegree = -1;

  XPoly() = default;
  explicit XPoly(std::vector<BaseScalar> coeffs);
  XPoly(std::initializer_list<BaseScalar> coeffs);
  explicit XPoly(const BaseScalar& constant);
  static XPoly monomial(int power, const BaseScalar& c = BaseScalar(1));
  static XPoly one() { return XPoly(BaseScalar(1)); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BaseScalar& leading() const;
  // Zero outside the stored range.
  BaseScalar coeff(std::size_t i) const;
  const std::vector<BaseScalar>& coeffs() const { return coeffs_; }

  XPoly operator-() const;
  XPoly& operator+=(const XPoly& o);
  XPoly& operator-=(const XPoly& o);
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const XPoly& a, const XPoly& b);

  XPoly scaled(const BaseScalar& c) const;
  XPoly monic() const;
  // p(X) -> p(X^d).
  XPoly substitute_power(int d) const;

  static std::pair<XPoly, XPoly> divmod(const XPoly& a, const XPoly& b);
  // Monic gcd over Q(u); gcd(0, 0) = 0.
  static XPoly gcd(XPoly a, XPoly b);

  friend bool operator==(const XPoly&, const XPoly&) = default;

 private:
  void trim();
  std::vector<BaseScalar> coeffs_;
};

}  // namespace rsl

#endif  // RSL_CORE_XPOLY_HPP
