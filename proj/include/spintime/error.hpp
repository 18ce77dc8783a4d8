#pragma once

#include <stdexcept>
#include <string>

namespace spintime {

// Base of every exception thrown by the library. The CLI maps subclasses
// onto report statuses and exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid index, mis-sized vector, bad partition, ...
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A size cap (generator count, state-space dimension) would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Valid input that this implementation deliberately does not handle.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// A set of elements does not close under the bracket.
class AlgebraError : public Error {
 public:
  using Error::Error;
};

// Operation precondition on the algebraic content of an input
// (symmetry, metric sign) violated.
class ContractError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ConstructionError : public Error {
 public:
  using Error::Error;
};

// Bad command line, unknown suite or malformed config; CLI exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Unreadable input or unwritable output; CLI exit code 3.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace spintime
