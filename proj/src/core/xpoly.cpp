#include "rsl/core/xpoly.hpp"

#include <algorithm>

#include "modular.hpp"
#include "rsl/errors.hpp"

namespace rsl {

XPoly::XPoly(std::vector<BaseScalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

XPoly::XPoly(std::initializer_list<BaseScalar> coeffs) : coeffs_(coeffs) { trim(); }

XPoly::XPoly(const BaseScalar& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

XPoly XPoly::monomial(int power, const BaseScalar& c) {
  if (power < 0) throw PreconditionError("negative power of X");
  std::vector<BaseScalar> coeffs(static_cast<std::size_t>(power) + 1);
  coeffs.back() = c;
  return XPoly(std::move(coeffs));
}

void XPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const BaseScalar& XPoly::leading() const {
  if (coeffs_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

BaseScalar XPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BaseScalar();
}

XPoly XPoly::operator-() const {
  XPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

XPoly& XPoly::operator+=(const XPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BaseScalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return XPoly(std::move(out));
}

XPoly XPoly::scaled(const BaseScalar& c) const {
  if (c.is_zero()) return {};
  XPoly p = *this;
  for (auto& x : p.coeffs_) x *= c;
  return p;
}

XPoly XPoly::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  return scaled(leading().inverse());
}

XPoly XPoly::substitute_power(int d) const {
  if (d < 1) throw PreconditionError("substitution power must be positive");
  if (is_zero() || d == 1) return *this;
  std::vector<BaseScalar> out((coeffs_.size() - 1) * static_cast<std::size_t>(d) + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * d] = coeffs_[i];
  return XPoly(std::move(out));
}

std::pair<XPoly, XPoly> XPoly::divmod(const XPoly& a, const XPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {XPoly(), a};
  std::vector<BaseScalar> quotient(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  std::vector<BaseScalar> rem = a.coeffs_;
  const BaseScalar lead_inv = b.leading().inverse();
  const std::size_t db = b.coeffs_.size() - 1;
  for (std::size_t top = rem.size(); top-- > db;) {
    if (rem[top].is_zero()) continue;
    const BaseScalar c = rem[top] * lead_inv;
    const std::size_t shift = top - db;
    quotient[shift] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      if (!b.coeffs_[j].is_zero()) rem[shift + j] -= c * b.coeffs_[j];
    }
  }
  rem.resize(db);
  return {XPoly(std::move(quotient)), XPoly(std::move(rem))};
}

XPoly XPoly::gcd(XPoly a, XPoly b) {
  if (detail::provably_coprime(a, b)) return XPoly::one();
  while (!b.is_zero()) {
    XPoly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

}  // namespace rsl
