#pragma once

#include <stdexcept>
#include <string>

namespace eseries {

// Base class for failures raised by the library. Programming errors
// (null-like misuse, invalid constructor arguments) throw the standard
// logic_error family instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Evaluation requested on the branch cut (-inf, -1] of the principal log.
class BranchCutError : public Error {
 public:
  using Error::Error;
};

// Requested precision is too small for the operation's error amplification.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// Operation rejected because its cost grows beyond the configured ceiling.
class CostLimitError : public Error {
 public:
  using Error::Error;
};

// Iterative refinement hit its node cap before reaching the tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Coefficient table does not extend to the requested index.
class TableRangeError : public Error {
 public:
  using Error::Error;
};

// An |a_j| > 1 was observed in a prefix the tail model requires bounded.
class PrefixBoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace eseries
