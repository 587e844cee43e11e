#pragma once

#include <stdexcept>
#include <string>

namespace trajsimp {

// Bad configuration or arguments supplied by the caller (CLI exit code 1).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed or inconsistent input data (CLI exit code 2).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operation was called outside its contract, e.g. fit_step on a point
// that classifies as a break.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A result violates an internal invariant (CLI exit code 3).
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace trajsimp
