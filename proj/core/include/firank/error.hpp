#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace firank {

enum class ErrorCode {
    InvalidValue,
    InvalidLabel,
    EmptyInput,
    ShapeError,
    InvalidArgument,
    DegenerateDistribution,
    InvalidMask,
    EmptyGlcm,
    InsufficientClass,
    InsufficientSamples,
    InvalidGrid,
    ConvergenceFailure,
    UnknownMethod,
    InvalidBound,
    EvaluationFailure,
    TooManyFeatures,
    InvalidIndex,
    ParseError,
    NoInput,
    IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Typed failure raised by every fallible operation in the library.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidValue: return "InvalidValue";
        case ErrorCode::InvalidLabel: return "InvalidLabel";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::ShapeError: return "ShapeError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::DegenerateDistribution: return "DegenerateDistribution";
        case ErrorCode::InvalidMask: return "InvalidMask";
        case ErrorCode::EmptyGlcm: return "EmptyGlcm";
        case ErrorCode::InsufficientClass: return "InsufficientClass";
        case ErrorCode::InsufficientSamples: return "InsufficientSamples";
        case ErrorCode::InvalidGrid: return "InvalidGrid";
        case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorCode::UnknownMethod: return "UnknownMethod";
        case ErrorCode::InvalidBound: return "InvalidBound";
        case ErrorCode::EvaluationFailure: return "EvaluationFailure";
        case ErrorCode::TooManyFeatures: return "TooManyFeatures";
        case ErrorCode::InvalidIndex: return "InvalidIndex";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NoInput: return "NoInput";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace firank
