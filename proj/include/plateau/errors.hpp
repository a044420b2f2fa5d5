#pragma once

#include <stdexcept>
#include <string>

namespace plateau {

/// Caller supplied arguments outside an operation's contract.
class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed. Always a bug, never user input.
class InvariantViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Exhaustive work was refused because it exceeds the configured budget.
class BudgetExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace plateau
