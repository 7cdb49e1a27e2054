#ifndef RSL_CORE_FORMAT_HPP
#define RSL_CORE_FORMAT_HPP

#include <string>

#include <json.hpp>

#include "rsl/core/base_scalar.hpp"
#include "rsl/core/rational_function.hpp"
#include "rsl/core/truncated_series.hpp"
#include "rsl/core/xpoly.hpp"

namespace rsl {

// Plain text, in terms of q: u^{2k} prints as q^k, u^{2k+1} as q^(k+1/2).
std::string to_text(const BaseScalar& a);
std::string to_text(const XPoly& p, const std::string& var = "X");
std::string to_text(const RationalFunction& r, const std::string& var = "X");
std::string to_text(const TruncatedSeries& s, const std::string& var = "X");

std::string to_latex(const BaseScalar& a);
std::string to_latex(const XPoly& p, const std::string& var = "X");
std::string to_latex(const RationalFunction& r, const std::string& var = "X");
std::string to_latex(const TruncatedSeries& s, const std::string& var = "X");

// {"num": [[exp, "p/q"], ...], "den": [[exp, "p/q"], ...]}, exponents are powers of u.
nlohmann::json to_json(const BaseScalar& a);
// {"var": "X", "num": [BaseScalar, ...], "den": [BaseScalar, ...]}, ascending powers.
nlohmann::json to_json(const RationalFunction& r);
// {"var": "X", "order": D, "coefficients": [BaseScalar, ...]}.
nlohmann::json to_json(const TruncatedSeries& s);

// Inverses of to_json. Throw ParseError on malformed input, DivisionByZero on a zero denominator.
BaseScalar base_scalar_from_json(const nlohmann::json& j);
RationalFunction rational_function_from_json(const nlohmann::json& j);
TruncatedSeries truncated_series_from_json(const nlohmann::json& j);

}  // namespace rsl

#endif  // RSL_CORE_FORMAT_HPP
