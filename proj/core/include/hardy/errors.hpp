#pragma once

#include <stdexcept>
#include <string>

namespace hardy {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point lies outside the region where an operation is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Non-finite coefficient or otherwise malformed series.
class InvalidSeries : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class InvalidWeight : public Error {
 public:
  using Error::Error;
};

class ZeroSeries : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// The point handed to a reflection is not a root of the series.
class NotARoot : public Error {
 public:
  using Error::Error;
};

class ChainInconsistent : public Error {
 public:
  using Error::Error;
};

class InsufficientDepth : public Error {
 public:
  using Error::Error;
};

class CapTooLarge : public Error {
 public:
  using Error::Error;
};

class KTooSmall : public Error {
 public:
  using Error::Error;
};

class NonFinite : public Error {
 public:
  using Error::Error;
};

class InvalidSignal : public Error {
 public:
  using Error::Error;
};

class WeightClassMismatch : public Error {
 public:
  using Error::Error;
};

class BlaschkeConditionViolated : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// A verification precondition on the instance (not the weight) failed.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hardy
