#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pegasus_topo {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A coordinate or parameter lies outside its declared range.
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& what)
      : Error(what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

// The requested operation needs a different layer count (e.g. Pegasus on Z=1).
class UnsupportedTopology : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Caller asked for an impossible combination (style vs graph kind, limits).
class UsageError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace pegasus_topo
