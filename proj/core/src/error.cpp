#include "cipherselect/error.hpp"

namespace cipherselect {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::UnsupportedKeySize: return "UnsupportedKeySize";
        case ErrorCode::MalformedKey: return "MalformedKey";
        case ErrorCode::WrongBlockLength: return "WrongBlockLength";
        case ErrorCode::StreamCipherMisuse: return "StreamCipherMisuse";
        case ErrorCode::BlockCipherMisuse: return "BlockCipherMisuse";
        case ErrorCode::BadBlockSize: return "BadBlockSize";
        case ErrorCode::CorruptPadding: return "CorruptPadding";
        case ErrorCode::WrongLength: return "WrongLength";
        case ErrorCode::BadSize: return "BadSize";
        case ErrorCode::EmptyWorkload: return "EmptyWorkload";
        case ErrorCode::ConfigMismatch: return "ConfigMismatch";
        case ErrorCode::InsufficientSamples: return "InsufficientSamples";
        case ErrorCode::DegenerateSizes: return "DegenerateSizes";
        case ErrorCode::NonPositiveSlope: return "NonPositiveSlope";
        case ErrorCode::NoFitAvailable: return "NoFitAvailable";
        case ErrorCode::NoFeasibleCipher: return "NoFeasibleCipher";
        case ErrorCode::InvalidConstraint: return "InvalidConstraint";
        case ErrorCode::IoFailure: return "IoFailure";
        case ErrorCode::SchemaViolation: return "SchemaViolation";
        case ErrorCode::BadArgument: return "BadArgument";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace cipherselect
