#pragma once

#include <stdexcept>
#include <string>

namespace approxseq {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (empty sequence, bad length, zero entry, ...).
struct InputError : Error {
  using Error::Error;
};

/// Exact and float scalars were mixed in one computation.
struct ModeError : Error {
  using Error::Error;
};

/// An operation's stated precondition does not hold for the given data.
struct PreconditionError : Error {
  using Error::Error;
};

/// A point lies outside the domain of a function.
struct DomainError : Error {
  using Error::Error;
};

} // namespace approxseq
