#pragma once

#include <stdexcept>
#include <string>

namespace stairflow {

// Bad user input: unsupported n, malformed text, out-of-range arguments.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in number field") {}
};

// An internal invariant or a cross-check failed.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stairflow
