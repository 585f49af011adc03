#pragma once

#include <stdexcept>
#include <string>

namespace motesim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent configuration. Maps to CLI exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Event scheduled in the past, or run target behind the clock.
class SchedulingError : public Error {
 public:
  using Error::Error;
};

// Argument outside an operation's mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A runtime invariant was violated mid-run. Maps to CLI exit code 3.
class InvariantError : public Error {
 public:
  using Error::Error;
};

// Reports with mismatched topology/seed/duration were compared.
class ComparisonError : public Error {
 public:
  using Error::Error;
};

}  // namespace motesim
