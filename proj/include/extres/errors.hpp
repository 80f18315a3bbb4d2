#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace extres {

// Base of every error the library throws. Callers that only care about
// "something mathematical went wrong" can catch this.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class AmbientMismatch : public Error {
public:
  AmbientMismatch(int lhs, int rhs);
};

class NotDivisible : public Error {
public:
  using Error::Error;
};

class NotInIdeal : public Error {
public:
  using Error::Error;
};

// The colon I : (1) is the whole ring, which is not a monomial ideal we model.
class UnitColon : public Error {
public:
  UnitColon() : Error("colon by the unit monomial is the whole ring") {}
};

class NotStable : public Error {
public:
  using Error::Error;
};

class NotTSpread : public Error {
public:
  using Error::Error;
};

class NotRegular : public Error {
public:
  using Error::Error;
};

class ZeroIdeal : public Error {
public:
  using Error::Error;
};

class ResourceLimit : public Error {
public:
  using Error::Error;
};

// Raised when a lifting system that must be solvable is not.
class InconsistentSystem : public Error {
public:
  using Error::Error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace extres
