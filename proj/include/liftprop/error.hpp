#pragma once

#include <stdexcept>
#include <string>

namespace liftprop {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A point, set or assignment that does not belong to the space it is used with.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DiscontinuousMap : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace liftprop
