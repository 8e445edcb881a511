#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lcpbound {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// A bound's class precondition (B-matrix, SDD M-matrix, ...) does not hold.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

class NotBMatrix : public NotApplicable {
 public:
  using NotApplicable::NotApplicable;
};

class NotSddM : public NotApplicable {
 public:
  using NotApplicable::NotApplicable;
};

class Degenerate : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class NoSolution : public Error {
 public:
  using Error::Error;
};

class DimensionCap : public Error {
 public:
  using Error::Error;
};

/// Input-file errors carry the 1-based line number they were detected on.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DimensionError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace lcpbound
