#pragma once

#include <stdexcept>
#include <string>

namespace haarperm {

/// Failure categories surfaced by the library. The CLI maps these to exit
/// codes: input/validation problems -> 2, exceeded enumeration budgets -> 3.
enum class ErrorKind {
    InvalidArgument,        // malformed input, failed file validation
    EmptyCollection,        // operation requires a nonempty collection
    EmptyInput,             // split of an empty index set
    DepthTooLarge,          // enumeration budget exceeded
    DepthMismatch,          // mixed depths between tree-sized values
    NormalizationMismatch,  // coefficient series in the wrong normalization
    RootViolation,          // split input not contained in its root
    ZeroSeries,             // decomposition of the zero series
    NonContraction,         // K <= M(M+1): termination argument fails
    NotLevelPreserving,     // check requires |pi(I)| = |I|
    IoError,                // file could not be read or written
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

inline const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::EmptyCollection: return "EmptyCollection";
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::DepthTooLarge: return "DepthTooLarge";
        case ErrorKind::DepthMismatch: return "DepthMismatch";
        case ErrorKind::NormalizationMismatch: return "NormalizationMismatch";
        case ErrorKind::RootViolation: return "RootViolation";
        case ErrorKind::ZeroSeries: return "ZeroSeries";
        case ErrorKind::NonContraction: return "NonContraction";
        case ErrorKind::NotLevelPreserving: return "NotLevelPreserving";
        case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace haarperm
