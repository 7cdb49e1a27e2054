#ifndef RSL_CORE_UPOLY_HPP
#define RSL_CORE_UPOLY_HPP

#include <map>
#include <utility>

#include "rsl/core/big_rational.hpp"

namespace rsl {

// Sparse polynomial in u = q^{1/2} with rational coefficients. Exponents are
// nonnegative and no stored coefficient is zero.
class UPoly {
 public:
  using Terms = std::map<int, BigRational>;

  UPoly() = default;
  explicit UPoly(const BigRational& c);
  static UPoly monomial(int exponent, const BigRational& c = BigRational(1));
  // Builds from (exponent, coefficient) pairs, summing repeats and dropping zeros.
  static UPoly from_terms(const Terms& terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;
  // -1 for the zero polynomial.
  int degree() const;
  // Lowest exponent with a nonzero coefficient; -1 for zero.
  int low_degree() const;
  const BigRational& leading() const;
  BigRational coeff(int exponent) const;
  const Terms& terms() const { return terms_; }

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);

  UPoly scaled(const BigRational& c) const;
  // Multiplies by u^k (k >= 0).
  UPoly shifted_up(int k) const;
  // Divides by u^k; requires k <= low_degree().
  UPoly shifted_down(int k) const;
  // Leading coefficient 1; zero stays zero.
  UPoly monic() const;

  // Euclidean division over Q. Throws DivisionByZero when b is zero.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  // Monic gcd; gcd(0, 0) = 0.
  static UPoly gcd(UPoly a, UPoly b);

  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  Terms terms_;
};

}  // namespace rsl

#endif  // RSL_CORE_UPOLY_HPP
