#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skein {

// Malformed textual input (words, polynomials, representation or
// presentation files). Carries the byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A configurable resource limit was exhausted. Deliberately distinct from
// any mathematical failure: the computation was cut off, not refuted.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& message) : std::runtime_error(message) {}
};

// Cooperative cancellation (see GroebnerOptions::cancel).
class CancelledError : public std::runtime_error {
 public:
  CancelledError() : std::runtime_error("computation cancelled") {}
};

}  // namespace skein
