#ifndef RSL_ERRORS_HPP
#define RSL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsl {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// A documented precondition of an operation was violated by its arguments.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The inputs are well formed but the operation has no defined value for them
// (e.g. an unsupported representation kind or derivative level).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected, const std::string& found);

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

// Syntactically valid input that violates a semantic rule (d must divide r, ...).
class SemanticError : public Error {
 public:
  using Error::Error;
};

}  // namespace rsl

#endif  // RSL_ERRORS_HPP
