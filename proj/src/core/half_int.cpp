#include "rsl/core/half_int.hpp"

#include <charconv>

#include "rsl/errors.hpp"

namespace rsl {

namespace {

int parse_int(std::string_view text, std::size_t offset) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError(offset, {"integer"}, std::string(text));
  }
  return value;
}

}  // namespace

HalfInt HalfInt::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_int(parse_int(text, 0));
  const int num = parse_int(text.substr(0, slash), 0);
  if (text.substr(slash + 1) != "2") {
    const int den = parse_int(text.substr(slash + 1), slash + 1);
    if (den == 1) return from_int(num);
    throw ParseError(slash + 1, {"denominator 1 or 2"}, std::string(text.substr(slash + 1)));
  }
  return from_twice(num);
}

int HalfInt::to_int() const {
  if (!is_integer()) throw DomainError("half-integer " + str() + " is not an integer");
  return twice_ / 2;
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace rsl
