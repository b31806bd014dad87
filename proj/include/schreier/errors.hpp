#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schreier {

/// Malformed textual input (ordinal expressions, sets, vectors).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An operation was called outside its domain (e.g. a successor where a
/// limit ordinal is required, or a prefix that is not a family member).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource cap was hit. Callers treat this as "unknown, at
/// least this large", never as a wrong answer.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace schreier
