#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text. `position` is a 0-based byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class DialectError : public Error {
 public:
  using Error::Error;
};

class InvalidPath : public Error {
 public:
  using Error::Error;
};

class TooManyAtoms : public Error {
 public:
  using Error::Error;
};

class BoundsExceeded : public Error {
 public:
  using Error::Error;
};

class Underflow : public Error {
 public:
  using Error::Error;
};

class EmptyElement : public Error {
 public:
  using Error::Error;
};

class NotInMonad : public Error {
 public:
  using Error::Error;
};

}  // namespace eg
