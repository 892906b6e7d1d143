#pragma once

#include <stdexcept>
#include <string>

namespace adelic {

enum class ErrorCode {
  VariableMismatch,
  FieldMismatch,
  DivisionByZero,
  InsufficientPrecision,
  UnsupportedFactorization,
  NotIrreducible,
  NotCoprime,
  InvalidChain,
  InvalidPoint,
  PlaceNotOnScheme,
  Undefined,
  NotInCompletion,
  CoordinateFailure,
  NonRationalPoint,
  Inseparable,
  DegreeMismatch,
  Parse,
  Unsupported,
};

const char* error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the typed codes above so
/// callers can branch (retry on InsufficientPrecision, report Parse errors, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorCode::Parse, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace adelic
