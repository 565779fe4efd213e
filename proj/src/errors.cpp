#include "elltor/errors.hpp"

namespace elltor {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::NotIrreducible: return "NotIrreducible";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::FieldTooLarge: return "FieldTooLarge";
        case ErrorCode::OutOfDeskScale: return "OutOfDeskScale";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::PointNotOnCurve: return "PointNotOnCurve";
        case ErrorCode::SingularCurve: return "SingularCurve";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::EllEqualsChar: return "EllEqualsChar";
        case ErrorCode::SingularFamilyMember: return "SingularFamilyMember";
        case ErrorCode::CharSeven: return "CharSeven";
        case ErrorCode::CharEleven: return "CharEleven";
        case ErrorCode::ExponentGuard: return "ExponentGuard";
        case ErrorCode::NotEllGroup: return "NotEllGroup";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::EqualPrimes: return "EqualPrimes";
        case ErrorCode::LimitGuard: return "LimitGuard";
        case ErrorCode::PrecondViolation: return "PrecondViolation";
        case ErrorCode::UnsupportedGenus: return "UnsupportedGenus";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::ZeroDenominator: return "ZeroDenominator";
        case ErrorCode::BadInput: return "BadInput";
    }
    return "Unknown";
}

} // namespace elltor
