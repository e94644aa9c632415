#pragma once

#include <stdexcept>
#include <string>

namespace hesscell {

// Malformed or out-of-contract input (bad permutation string, decomposable h, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operands from different coefficient domains or variable universes.
class DomainMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configurable work budget ran out before the computation finished.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency assertion failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hesscell
