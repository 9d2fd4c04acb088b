#pragma once

#include <stdexcept>
#include <string>

namespace qent {

enum class ErrorCode {
  InvalidArgument,
  LengthMismatch,
  ZeroVector,
  DimensionMismatch,
  InvalidSubset,
  NotHermitian,
  NotPositiveSemidefinite,
  NoConvergence,
  UnknownName,
  InvalidArity,
  ParseError,
  NormOutOfTolerance,
  InvalidConfig,
  Io,
  Numerical,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so the
// C layer can map it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& source, int line, const std::string& what)
      : Error(ErrorCode::ParseError,
              source + ":" + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace qent
