#pragma once

#include <stdexcept>
#include <string>

namespace projd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The variable degrees do not generate the grading group.
class NotEffective : public Error {
public:
  using Error::Error;
};

/// An operation that needs a relevant element received a non-relevant one.
class NotRelevant : public Error {
public:
  using Error::Error;
};

/// A monomial prime contains a variable of the localizing element.
class PrimeMeetsF : public Error {
public:
  using Error::Error;
};

/// A conical ideal entry is not a relevant monomial.
class BadConicalIdeal : public Error {
public:
  using Error::Error;
};

/// Malformed user input (ring-spec files, command arguments).
class ParseError : public Error {
public:
  ParseError(const std::string &what, int line = 0, int column = 0)
      : Error(line > 0 ? what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"
                       : what),
        line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

/// A self-check on a computed certificate failed. Always a bug.
class InvariantViolation : public Error {
public:
  using Error::Error;
};

} // namespace projd
