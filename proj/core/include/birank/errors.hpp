#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace birank {

enum class ErrorCode {
    IndexOutOfRange,
    NonPositiveWeight,
    EmptySide,
    IsolatedVertex,
    MalformedLine,
    EmptyFile,
    UnsupportedHeader,
    NnzMismatch,
    AllVerticesIsolated,
    DimensionMismatch,
    EmptyBlock,
    InvalidParameter,
    NotStronglyConnected,
    NotStochastic,
    TooLarge,
    Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/**
 * Single exception type for the library. The code distinguishes failure
 * classes so callers (the CLI in particular) can map them to exit codes
 * without string matching.
 */
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace birank
