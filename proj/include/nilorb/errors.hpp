#pragma once

#include <stdexcept>
#include <string>

namespace nilorb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: dimension mismatches, bad indices, invalid partitions.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The requested object exists mathematically but is not implemented.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// Internal data failed a consistency check that should never fail.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Neither variant of an elementary step produces a partition of the right type.
class StepInapplicableError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

class LoadError : public Error {
 public:
  using Error::Error;
};

}  // namespace nilorb
