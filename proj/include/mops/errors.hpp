#ifndef MOPS_ERRORS_HPP
#define MOPS_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace mops {

// Invalid input or a parameter outside the supported domain. CLI exit code 2.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A denominator vanished at the requested parameter point. CLI exit code 3.
class PoleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A truncated series did not reach its tolerance. CLI exit code 3.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double partial)
      : std::runtime_error(what), partial_(partial) {}
  double partialValue() const { return partial_; }

 private:
  double partial_;
};

// Requested combination of modes is not supported (e.g. products with generic n).
class UnsupportedModeError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Syntax error in an expression, with 1-based line/column and the tokens
// that would have been accepted there.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, int line, int column, std::vector<std::string> expected = {})
      : DomainError(what), line_(line), column_(column), expected_(std::move(expected)) {}
  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

// An internal identity failed (e.g. a non-exact division in an operator check).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mops

#endif
