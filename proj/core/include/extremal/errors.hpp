#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace extremal {

// Violated input contract (bad sizes, overlapping parts, missing table
// entries, ...). The CLI maps this to exit code 2.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Instance exceeds a configured search limit. Deliberate refusal, not a
// failure; the message names the limit. CLI exit code 3.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed serialized input. `offset` is the byte position of the first
// offending byte.
struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& what, std::size_t off)
      : std::runtime_error(what + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

}  // namespace extremal
