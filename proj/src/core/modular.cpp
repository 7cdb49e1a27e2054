#include "modular.hpp"

#include <utility>

namespace rsl::detail {

namespace {

using Poly = std::vector<std::uint64_t>;

std::uint64_t mul(std::uint64_t a, std::uint64_t b) { return a * b % kModulus; }
std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return (a + kModulus - b) % kModulus; }

std::uint64_t power(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  while (exp > 0) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inverse(std::uint64_t a) { return power(a, kModulus - 2); }

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Degree of gcd over F_p; -1 when both are zero.
int gcd_degree(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const std::uint64_t lead_inv = inverse(b.back());
    while (a.size() >= b.size()) {
      const std::uint64_t c = mul(a.back(), lead_inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = sub(a[shift + j], mul(c, b[j]));
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

}  // namespace

std::optional<std::uint64_t> reduce(const BigRational& r) {
  const mpz_class p(static_cast<unsigned long>(kModulus));
  const mpz_class den = r.get_den() % p;
  if (den == 0) return std::nullopt;
  mpz_class num = r.get_num() % p;
  if (num < 0) num += p;
  return mul(num.get_ui(), inverse(den.get_ui()));
}

std::optional<std::vector<std::uint64_t>> reduce_coeffs(const UPoly& p) {
  Poly out(static_cast<std::size_t>(p.degree() + 1), 0);
  for (const auto& [e, c] : p.terms()) {
    auto v = reduce(c);
    if (!v) return std::nullopt;
    out[static_cast<std::size_t>(e)] = *v;
  }
  return out;
}

std::optional<std::uint64_t> evaluate(const UPoly& p) {
  std::uint64_t acc = 0;
  for (const auto& [e, c] : p.terms()) {
    auto v = reduce(c);
    if (!v) return std::nullopt;
    acc = (acc + mul(*v, power(kEvalPoint, static_cast<std::uint64_t>(e)))) % kModulus;
  }
  return acc;
}

std::optional<std::uint64_t> evaluate(const BaseScalar& a) {
  auto n = evaluate(a.num());
  auto d = evaluate(a.den());
  if (!n || !d || *d == 0) return std::nullopt;
  return mul(*n, inverse(*d));
}

std::optional<std::vector<std::uint64_t>> evaluate(const XPoly& p) {
  Poly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    auto v = evaluate(c);
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  return out;
}

bool provably_coprime(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return false;
  auto ra = reduce_coeffs(a);
  auto rb = reduce_coeffs(b);
  if (!ra || !rb || ra->back() == 0 || rb->back() == 0) return false;
  return gcd_degree(std::move(*ra), std::move(*rb)) == 0;
}

bool provably_coprime(const XPoly& a, const XPoly& b) {
  if (a.is_zero() || b.is_zero()) return false;
  auto ea = evaluate(a);
  auto eb = evaluate(b);
  if (!ea || !eb || ea->back() == 0 || eb->back() == 0) return false;
  return gcd_degree(std::move(*ea), std::move(*eb)) == 0;
}

}  // namespace rsl::detail
