#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace liediff {

enum class ErrorCode {
    ZeroDenominator,
    DivisionByZero,
    UnknownVariable,
    UnknownDerivation,
    IndexOutOfRange,
    ArityMismatch,
    NonConstantStructureConstants,
    TruncationExceeded,
    NotIndependent,
    NoCoordinateSubset,
    CommutationFailure,
    SyntaxError,
    IoError,
    SchemaError,
    PresentationInvalid,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& what)
        : Error(ErrorCode::SyntaxError, "at offset " + std::to_string(offset) + ": " + what),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

inline std::string_view error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::UnknownDerivation: return "UnknownDerivation";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NonConstantStructureConstants: return "NonConstantStructureConstants";
    case ErrorCode::TruncationExceeded: return "TruncationExceeded";
    case ErrorCode::NotIndependent: return "NotIndependent";
    case ErrorCode::NoCoordinateSubset: return "NoCoordinateSubset";
    case ErrorCode::CommutationFailure: return "CommutationFailure";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::PresentationInvalid: return "PresentationInvalid";
    }
    return "Error";
}

} // namespace liediff
