#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fullness {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: bad polynomial text, bad problem file, bad options.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InputError(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A computation was well posed but could not be completed, e.g. the ideal is
/// not a reduction of the maximal ideal or a colon chain never stabilized.
class MathError : public Error {
 public:
  using Error::Error;
};

class DegreeCapExceeded : public MathError {
 public:
  using MathError::MathError;
};

class TimeBudgetExceeded : public MathError {
 public:
  using MathError::MathError;
};

}  // namespace fullness
