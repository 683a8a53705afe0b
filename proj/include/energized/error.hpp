#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace energized {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: set systems, scalar literals, field presets.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation that is not defined for the requested scalar kind
/// (e.g. the Dieudonne determinant over octonions).
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// Eigenvalue tracking could not produce an unambiguous labelling.
class TrackingAmbiguity : public Error {
 public:
  TrackingAmbiguity(const std::string& what, std::size_t wheel, std::size_t suggested_steps)
      : Error(what), wheel_(wheel), suggested_steps_(suggested_steps) {}

  std::size_t wheel() const noexcept { return wheel_; }
  std::size_t suggested_steps() const noexcept { return suggested_steps_; }

 private:
  std::size_t wheel_;
  std::size_t suggested_steps_;
};

}  // namespace energized
