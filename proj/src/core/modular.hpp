#ifndef RSL_SRC_CORE_MODULAR_HPP
#define RSL_SRC_CORE_MODULAR_HPP

// Reduction of exact values to F_p at a fixed point u = t. Only used to prove
// coprimality cheaply: when the leading coefficients survive the reduction and
// the reduced gcd is constant, the exact gcd is 1.

#include <cstdint>
#include <optional>
#include <vector>

#include "rsl/core/base_scalar.hpp"
#include "rsl/core/big_rational.hpp"
#include "rsl/core/upoly.hpp"
#include "rsl/core/xpoly.hpp"

namespace rsl::detail {

inline constexpr std::uint64_t kModulus = 2147483647;  // 2^31 - 1
inline constexpr std::uint64_t kEvalPoint = 1234577;

std::optional<std::uint64_t> reduce(const BigRational& r);
// Coefficients of p reduced mod kModulus, ascending; nullopt if a denominator vanishes.
std::optional<std::vector<std::uint64_t>> reduce_coeffs(const UPoly& p);
// p(kEvalPoint) mod kModulus.
std::optional<std::uint64_t> evaluate(const UPoly& p);
std::optional<std::uint64_t> evaluate(const BaseScalar& a);
// Coefficients of p at u = kEvalPoint, ascending; nullopt if any is undefined.
std::optional<std::vector<std::uint64_t>> evaluate(const XPoly& p);

// True only when the reduced images prove gcd(a, b) = 1.
bool provably_coprime(const UPoly& a, const UPoly& b);
bool provably_coprime(const XPoly& a, const XPoly& b);

}  // namespace rsl::detail

#endif  // RSL_SRC_CORE_MODULAR_HPP
