#ifndef SUBWORD_ERROR_HPP
#define SUBWORD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace subword {

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class InvalidMatrix : public Error
{
public:
  using Error::Error;
};

class OrbitBoundExceeded : public Error
{
public:
  using Error::Error;
};

class NotAFacet : public Error
{
public:
  using Error::Error;
};

class NotFlippable : public Error
{
public:
  using Error::Error;
};

class EmptyComplex : public Error
{
public:
  EmptyComplex() : Error("empty complex") {}
};

class CapExceeded : public Error
{
public:
  using Error::Error;
};

class NotTypeA : public Error
{
public:
  using Error::Error;
};

// Internal consistency failure; never caused by user input.
class InvariantViolation : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

// Carries a 1-based line/column for diagnostics on user input.
class ParseError : public Error
{
public:
  ParseError(const std::string& what, int line, int column)
  : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
    line_(line), column_(column)
  {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

} // namespace subword

#endif
