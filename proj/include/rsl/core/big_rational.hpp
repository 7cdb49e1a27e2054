#ifndef RSL_CORE_BIG_RATIONAL_HPP
#define RSL_CORE_BIG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rsl {

// Arbitrary precision rational. GMP keeps results of arithmetic in lowest
// terms with a positive denominator; values built by hand must go through
// make_rational().
using BigRational = mpq_class;

BigRational make_rational(long num, long den = 1);

// Parses "p" or "p/q" (decimal, optional sign). Throws ParseError.
BigRational parse_rational(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string rational_str(const BigRational& r);

}  // namespace rsl

#endif  // RSL_CORE_BIG_RATIONAL_HPP
