#include <birank/errors.hpp>

namespace birank {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::EmptySide: return "EmptySide";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::EmptyFile: return "EmptyFile";
    case ErrorCode::UnsupportedHeader: return "UnsupportedHeader";
    case ErrorCode::NnzMismatch: return "NnzMismatch";
    case ErrorCode::AllVerticesIsolated: return "AllVerticesIsolated";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyBlock: return "EmptyBlock";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::NotStronglyConnected: return "NotStronglyConnected";
    case ErrorCode::NotStochastic: return "NotStochastic";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

} // namespace birank
