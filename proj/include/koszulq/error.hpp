#pragma once

#include <stdexcept>
#include <string>

namespace kq {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad field spec, zero q entry, unparsable scalar.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The requested computation is outside the supported domain
/// (e.g. trace-form radical in small positive characteristic).
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// A structure-constant table failed exhaustive associativity certification.
class NonAssociative : public Error {
 public:
  using Error::Error;
};

/// A check whose hypotheses do not hold for the given input.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

}  // namespace kq
