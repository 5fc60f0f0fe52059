#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fiberforge {

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// A bounded search (coset enumeration, relator-word search) ran out of its
// configured budget.
struct BudgetExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input group is required to be perfect (trivial H_1) and is not.
struct NotPerfectError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A word fed to a solver lies outside the alphabet/image it is defined on.
struct MalformedWordError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally incompatible inputs (alphabet mismatch, inconsistent coset
// table / presentation pair).
struct IncompatibleInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation that requires a verified C'(1/6) presentation was invoked
// without one.
struct NotCertifiedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fiberforge
