#ifndef GARNIER_ERRORS_HPP
#define GARNIER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace garnier {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZeroError : Error {
  DivisionByZeroError() : Error("division by zero expression") {}
  explicit DivisionByZeroError(const std::string &what) : Error(what) {}
};

// A denominator vanished at a concrete evaluation point.
struct PoleError : Error {
  using Error::Error;
};

// A substitution made some denominator identically zero.
struct SubstitutionError : Error {
  using Error::Error;
};

struct ParseError : Error {
  size_t position;
  ParseError(const std::string &what, size_t pos)
      : Error(what + " at position " + std::to_string(pos)), position(pos) {}
};

struct UnknownNameError : Error {
  explicit UnknownNameError(const std::string &name)
      : Error("unknown catalog name: " + name) {}
};

struct UnsupportedMapError : Error {
  using Error::Error;
};

struct MemoryCapError : Error {
  MemoryCapError() : Error("memory cap exceeded during exact computation") {}
};

} // namespace garnier

#endif
