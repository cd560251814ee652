#pragma once

#include <stdexcept>
#include <string>

namespace sonc {

enum class ErrorCode {
    ParseError,
    DimensionMismatch,
    NegativeExponent,
    InvalidArgument,
    NotASimplex,
    NotInterior,
    OddVertex,
    NonpositiveOuterCoefficient,
    DenominatorOverflow,
    NonLatticeInnerPoint,
    DegenerateSupport,
    NotInPolytope,
    PositiveInnerCoefficient,
    InputNotSymmetric,
    DimensionTooLarge,
    BudgetExceeded,
    LambdaMismatch,
    Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NegativeExponent: return "NegativeExponent";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NotASimplex: return "NotASimplex";
        case ErrorCode::NotInterior: return "NotInterior";
        case ErrorCode::OddVertex: return "OddVertex";
        case ErrorCode::NonpositiveOuterCoefficient: return "NonpositiveOuterCoefficient";
        case ErrorCode::DenominatorOverflow: return "DenominatorOverflow";
        case ErrorCode::NonLatticeInnerPoint: return "NonLatticeInnerPoint";
        case ErrorCode::DegenerateSupport: return "DegenerateSupport";
        case ErrorCode::NotInPolytope: return "NotInPolytope";
        case ErrorCode::PositiveInnerCoefficient: return "PositiveInnerCoefficient";
        case ErrorCode::InputNotSymmetric: return "InputNotSymmetric";
        case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::LambdaMismatch: return "LambdaMismatch";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace sonc
