#pragma once

#include <stdexcept>
#include <string>

namespace ob {

// Mathematically invalid input: failed precondition, ill-formed diagram,
// out-of-range index. Maps to CLI exit code 1.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed text. The message carries a line (or byte) position.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ob
