#pragma once

#include <stdexcept>
#include <string>

namespace plateau {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition failures on numeric inputs (analytics, crossover, configs).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A tree task description that cannot be realized (g > b^d*, b < 2, d* < 1).
class InvalidSpec : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// b^d* does not fit in 64 bits.
class OverflowError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Escape task whose heuristic admits no strictly improving vertex.
class NoExit : public Error {
 public:
  using Error::Error;
};

class Unreachable : public Error {
 public:
  using Error::Error;
};

class NotLeveled : public Error {
 public:
  using Error::Error;
};

class MemoryBudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A random walk reached a vertex without successors before the depth cutoff.
class DeadEnd : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace plateau
