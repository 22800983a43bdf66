#ifndef NSLEN_ERROR_HPP
#define NSLEN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nslen {

enum class ErrorKind {
  Parse,
  DegreeMismatch,
  TierExceeded,
  LatticeCapExceeded,
  NotSubgroup,
  NotNormal,
  NotPermuted,
  NotSoluble,
  NotSemisimple,
  NotInGroup,
  TrivialGroup,
  InvalidArgument,
};

const char *to_string(ErrorKind kind);

/// Base of every error raised by the library. The kind lets callers (the CLI
/// in particular) map failures onto exit codes without string matching.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
    : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Cycle-notation and group-spec parse failures carry a 1-based position.
class ParseError : public Error {
public:
  enum class Reason { Malformed, RepeatedPoint, PointOutOfRange, Range, UnknownName };

  ParseError(Reason reason, const std::string &what, std::size_t line = 0,
             std::size_t column = 0)
    : Error(ErrorKind::Parse, what), reason_(reason), line_(line),
      column_(column) {}

  Reason reason() const noexcept { return reason_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  Reason reason_;
  std::size_t line_;
  std::size_t column_;
};

class TierExceeded : public Error {
public:
  explicit TierExceeded(const std::string &what)
    : Error(ErrorKind::TierExceeded, what) {}
};

class LatticeCapExceeded : public Error {
public:
  explicit LatticeCapExceeded(const std::string &what)
    : Error(ErrorKind::LatticeCapExceeded, what) {}
};

} // namespace nslen

#endif // NSLEN_ERROR_HPP
