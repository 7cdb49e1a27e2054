#include "rsl/core/big_rational.hpp"

#include <string>

#include "rsl/errors.hpp"

namespace rsl {

BigRational make_rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

BigRational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num, true)) throw ParseError(0, {"rational p/q"}, std::string(text));
  if (!valid_int(den, false)) throw ParseError(slash + 1, {"positive denominator"}, std::string(text));
  std::string num_str(num);
  if (!num_str.empty() && num_str.front() == '+') num_str.erase(0, 1);
  mpz_class n(num_str, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw DivisionByZero("zero denominator in '" + std::string(text) + "'");
  BigRational r(n, d);
  r.canonicalize();
  return r;
}

std::string rational_str(const BigRational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace rsl
