#pragma once

#include <stdexcept>
#include <string>

namespace rackkit {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad scalar strings, unknown labels, inconsistent sizes.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation is violated (e.g. non-cocommutative input
/// to the deformation complex, or a Leibniz identity failure).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A product or coproduct would leave the degree truncation of a filtered
/// algebra. Never silently dropped.
class TruncationOverflow : public Error {
 public:
  using Error::Error;
};

/// Requested computation exceeds the configured size budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold by construction failed (implementation bug or
/// hypothesis violation surfaced during verification).
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace rackkit
