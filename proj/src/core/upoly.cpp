#include "rsl/core/upoly.hpp"

#include "modular.hpp"
#include "rsl/errors.hpp"

namespace rsl {

namespace {

void accumulate(UPoly::Terms& terms, int exponent, const BigRational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

UPoly::UPoly(const BigRational& c) {
  if (c != 0) terms_.emplace(0, c);
}

UPoly UPoly::monomial(int exponent, const BigRational& c) {
  if (exponent < 0) throw PreconditionError("UPoly exponents must be nonnegative");
  UPoly p;
  if (c != 0) p.terms_.emplace(exponent, c);
  return p;
}

UPoly UPoly::from_terms(const Terms& terms) {
  UPoly p;
  for (const auto& [e, c] : terms) {
    if (e < 0) throw PreconditionError("UPoly exponents must be nonnegative");
    accumulate(p.terms_, e, c);
  }
  return p;
}

bool UPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

int UPoly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

int UPoly::low_degree() const { return terms_.empty() ? -1 : terms_.begin()->first; }

const BigRational& UPoly::leading() const {
  if (terms_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
  return terms_.rbegin()->second;
}

BigRational UPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigRational(0) : it->second;
}

UPoly UPoly::operator-() const {
  UPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  for (const auto& [e, c] : o.terms_) accumulate(terms_, e, c);
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  for (const auto& [e, c] : o.terms_) accumulate(terms_, e, -c);
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly p;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) accumulate(p.terms_, ea + eb, ca * cb);
  }
  return p;
}

UPoly UPoly::scaled(const BigRational& c) const {
  if (c == 0) return {};
  UPoly p = *this;
  for (auto& [e, coeff] : p.terms_) coeff *= c;
  return p;
}

UPoly UPoly::shifted_up(int k) const {
  if (k < 0) throw PreconditionError("negative shift");
  UPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e + k, c);
  return p;
}

UPoly UPoly::shifted_down(int k) const {
  if (k < 0 || (!is_zero() && k > low_degree())) {
    throw PreconditionError("shift exceeds the u-adic valuation");
  }
  UPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e - k, c);
  return p;
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  const BigRational inv = 1 / leading();
  return scaled(inv);
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  UPoly quotient;
  UPoly rem = a;
  const int db = b.degree();
  const BigRational lead_inv = 1 / b.leading();
  while (!rem.is_zero() && rem.degree() >= db) {
    const int shift = rem.degree() - db;
    const BigRational c = rem.leading() * lead_inv;
    quotient.terms_.emplace(shift, c);
    for (const auto& [e, cb] : b.terms_) accumulate(rem.terms_, e + shift, -c * cb);
  }
  return {std::move(quotient), std::move(rem)};
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  if (detail::provably_coprime(a, b)) return UPoly(BigRational(1));
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

}  // namespace rsl
