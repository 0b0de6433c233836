#pragma once

#include <stdexcept>

namespace turnpike {

// Argument fails a structural check: wrong shape, non-finite entries,
// out-of-range scalar.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A parameter combination breaks a stability/validity constraint
// (e.g. h*beta >= 1).
class ConstraintViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requested computation mode cannot serve the given model
// (adjoint gradients with a non-differentiable kernel).
class ModeNotSupported : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Objective or gradient became non-finite while iterating.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Horizon split leaves an empty tail (r1 = 0).
class DegenerateHorizon : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Configuration file could not be parsed or validated.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace turnpike
