#pragma once

#include <stdexcept>
#include <string>

namespace wph {

// Root of every error raised by the library. Each subclass names one failure
// class so callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ring is Z/m with m composite, or otherwise lacks the algorithms requested.
class UnsupportedRing : public Error {
 public:
  using Error::Error;
};

class NonInvertibleWeight : public Error {
 public:
  using Error::Error;
};

class MissingWeight : public Error {
 public:
  using Error::Error;
};

class CompositionNotZero : public Error {
 public:
  using Error::Error;
};

class ImageNotInOmega : public Error {
 public:
  using Error::Error;
};

class NotAMorphism : public Error {
 public:
  using Error::Error;
};

class HomotopyIdentityFailed : public Error {
 public:
  using Error::Error;
};

// A domain object violates one of its structural invariants.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace wph
