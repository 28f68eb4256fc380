#pragma once

#include <stdexcept>
#include <string>

namespace extremal {

/// Raised when inputs violate a documented precondition or parameter range.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a ground set does not fit the 64-bit vertex representation,
/// or a search space exceeds the oracle's table limits.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Raised by the Family JSON reader. `where()` names the offending line or field.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(where) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

}  // namespace extremal
