#pragma once

#include <stdexcept>
#include <string>

namespace elltor {

// Every recoverable domain failure carries one of these codes so callers
// (and the CLI's JSON encoder) can dispatch without string matching.
enum class ErrorCode {
    DivisionByZero,
    FieldMismatch,
    NotPrime,
    NotIrreducible,
    NotCoprime,
    FieldTooLarge,
    OutOfDeskScale,
    Overflow,
    PointNotOnCurve,
    SingularCurve,
    IndexOutOfRange,
    EllEqualsChar,
    SingularFamilyMember,
    CharSeven,
    CharEleven,
    ExponentGuard,
    NotEllGroup,
    NotNormalized,
    EqualPrimes,
    LimitGuard,
    PrecondViolation,
    UnsupportedGenus,
    SyntaxError,
    ZeroDenominator,
    BadInput,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

// Parse failure with a 1-based column into the offending source text.
class SyntaxError : public Error {
  public:
    SyntaxError(int column, const std::string& what)
        : Error(ErrorCode::SyntaxError, what), column_(column) {}

    int column() const { return column_; }

  private:
    int column_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace elltor
