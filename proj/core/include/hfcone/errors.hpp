#pragma once

#include <stdexcept>
#include <string>

namespace hfcone {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Checked 64-bit arithmetic overflowed during elimination.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent user data (profiles, polynomials, framings).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Input is well formed but outside what the engine handles (torsion in H_*(A_s)).
class UnsupportedInput : public InputError {
 public:
  using InputError::InputError;
};

/// A computed object failed a structural check that valid input guarantees.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hfcone
