#pragma once

#include <stdexcept>
#include <string>

namespace weakdiv {

// Malformed or out-of-contract input. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well formed but violates a hypothesis the theory needs
// (e.g. the infinite-order condition of the weak-abelian-part solver).
class UnsupportedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A self-check failed (Hasse bound, cross-checked divisibility verdicts).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace weakdiv
