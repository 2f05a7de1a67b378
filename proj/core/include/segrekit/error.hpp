#pragma once

#include <stdexcept>
#include <string>

namespace segre {

// Raised for any violation of an operation's domain: malformed input,
// division by zero, out-of-range indices, exhausted budgets.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// The coefficient bit budget of an iterated computation was exceeded.
class BudgetExceeded : public DomainError {
 public:
  explicit BudgetExceeded(const std::string& what) : DomainError(what) {}
};

// Two routes that must agree did not. Always a bug.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace segre
