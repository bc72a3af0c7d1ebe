#pragma once

#include <stdexcept>
#include <string>

namespace multicolor {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed document, unknown vertex, invalid value.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Two vectors (or a vector and a graph) disagree on dimension.
class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs)
      : Error("dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class UnknownColor : public Error {
 public:
  explicit UnknownColor(int color) : Error("unknown color " + std::to_string(color)) {}
};

/// An operation's stated precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The requested weight admits no coloring.
class NotPermissible : public Error {
 public:
  using Error::Error;
};

/// A configured size guard (vector cap, branch cap) was hit.
class ResourceLimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace multicolor
