#include <karytree/errors.hpp>

namespace karytree {

auto to_string(ErrorCode code) -> std::string_view
{
    switch (code) {
        case ErrorCode::MissingPair: return "MissingPair";
        case ErrorCode::ConflictingPair: return "ConflictingPair";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::LabelOutOfRange: return "LabelOutOfRange";
        case ErrorCode::InvalidDifferenceSet: return "InvalidDifferenceSet";
        case ErrorCode::EvenOrder: return "EvenOrder";
        case ErrorCode::EmptySubset: return "EmptySubset";
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::RootInLeaves: return "RootInLeaves";
        case ErrorCode::EmptyLeaves: return "EmptyLeaves";
        case ErrorCode::OrderTooLarge: return "OrderTooLarge";
        case ErrorCode::ExhaustiveTooLarge: return "ExhaustiveTooLarge";
        case ErrorCode::OrderTooSmall: return "OrderTooSmall";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::OrderTooLargeForExact: return "OrderTooLargeForExact";
        case ErrorCode::VerificationFailed: return "VerificationFailed";
    }
    return "Unknown";
}

KaryError::KaryError(ErrorCode code, const std::string & what) :
    std::runtime_error(std::string(to_string(code)) + ": " + what),
    _code(code)
{
}

void fail(ErrorCode code, const std::string & detail)
{
    throw KaryError(code, detail);
}

}
