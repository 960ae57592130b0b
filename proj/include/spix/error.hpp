#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spix {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the arguments of an operation does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The requested index has zero total mass and is not defined.
class UndefinedIndexError : public Error {
 public:
  using Error::Error;
};

// The reference total T1 is smaller than the observed total of the sequence.
class BasisTooSmallError : public Error {
 public:
  using Error::Error;
};

// Malformed graph input. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace spix
