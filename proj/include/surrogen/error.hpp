#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace surrogen {

// Failure categories used across the library. Codes other than
// RepairDidNotConverge map to CLI exit 2 (validation), that one to exit 3.
enum class ErrorCode {
    TooShort,
    NonFinite,
    InvalidArgument,
    LengthMismatch,
    NotRealSymmetric,
    ResidueTooLarge,
    MOutOfRange,
    AllNegative,
    RepairDidNotConverge,
    EmptySeries,
    LagOutOfRange,
    ConstantSeries,
    SingularSystem,
    FileNotFound,
    ColumnNotFound,
    ParseError,
    MissingData,
    AllMissing,
};

constexpr const char* error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::TooShort: return "TooShort";
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::NotRealSymmetric: return "NotRealSymmetric";
        case ErrorCode::ResidueTooLarge: return "ResidueTooLarge";
        case ErrorCode::MOutOfRange: return "MOutOfRange";
        case ErrorCode::AllNegative: return "AllNegative";
        case ErrorCode::RepairDidNotConverge: return "RepairDidNotConverge";
        case ErrorCode::EmptySeries: return "EmptySeries";
        case ErrorCode::LagOutOfRange: return "LagOutOfRange";
        case ErrorCode::ConstantSeries: return "ConstantSeries";
        case ErrorCode::SingularSystem: return "SingularSystem";
        case ErrorCode::FileNotFound: return "FileNotFound";
        case ErrorCode::ColumnNotFound: return "ColumnNotFound";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::MissingData: return "MissingData";
        case ErrorCode::AllMissing: return "AllMissing";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message,
          std::optional<std::size_t> index = std::nullopt)
        : std::runtime_error(message), code_(code), index_(index) {}

    ErrorCode code() const noexcept { return code_; }

    // Payload meaning depends on the code: offending sample index for
    // NonFinite, data row for ParseError/MissingData, remaining negative
    // count for RepairDidNotConverge.
    std::optional<std::size_t> index() const noexcept { return index_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> index_;
};

}  // namespace surrogen
