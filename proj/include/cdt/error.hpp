#pragma once

#include <stdexcept>
#include <string>

namespace cdt {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: out-of-range vertex, self-loop, duplicate edge, bad name.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation does not hold for the supplied graph.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// The requested computation is outside the supported scale or scope.
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace cdt
