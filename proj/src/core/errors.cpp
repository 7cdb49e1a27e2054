#include "rsl/errors.hpp"

#include <sstream>

namespace rsl {

namespace {

std::string describe(std::size_t position, const std::vector<std::string>& expected,
                     const std::string& found) {
  std::ostringstream os;
  os << "parse error at position " << position << ": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) os << (i + 1 == expected.size() ? " or " : ", ");
    os << expected[i];
  }
  os << ", found " << (found.empty() ? "end of input" : "'" + found + "'");
  return os.str();
}

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected,
                       const std::string& found)
    : Error(describe(position, expected, found)),
      position_(position),
      expected_(std::move(expected)) {}

}  // namespace rsl
