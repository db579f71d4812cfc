#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dompack {

// Raised when an input violates an operation's precondition.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an exhaustive solver is asked to enumerate more vertices than
// the configured guard allows.
class GuardExceeded : public std::length_error {
 public:
  GuardExceeded(std::size_t order, std::size_t guard)
      : std::length_error("order " + std::to_string(order) +
                          " exceeds solver guard " + std::to_string(guard) +
                          " (set DOMPACK_SOLVER_GUARD to override)"),
        order_(order),
        guard_(guard) {}

  std::size_t order() const noexcept { return order_; }
  std::size_t guard() const noexcept { return guard_; }

 private:
  std::size_t order_;
  std::size_t guard_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace dompack
