#pragma once

#include <stdexcept>
#include <string>

namespace cast {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Invalid membership-function or variable parameters.
class ParameterError : public Error {
public:
  using Error::Error;
};

// Caller supplied bad input (missing variable, length mismatch, out-of-range rating...).
class InputError : public Error {
public:
  using Error::Error;
};

// No rule fired, so there is nothing to defuzzify.
class DegenerateOutputError : public Error {
public:
  using Error::Error;
};

class UndefinedCorrelationError : public Error {
public:
  using Error::Error;
};

class NoValidScrambleError : public Error {
public:
  using Error::Error;
};

// Chromosome does not match the layout derived from a config.
class LayoutError : public Error {
public:
  using Error::Error;
};

// Session operation not permitted in the current state.
class StateError : public Error {
public:
  using Error::Error;
};

class NotFoundError : public Error {
public:
  using Error::Error;
};

}  // namespace cast
