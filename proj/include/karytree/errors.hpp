#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace karytree {

enum class ErrorCode {
    MissingPair,
    ConflictingPair,
    SelfLoop,
    LabelOutOfRange,
    InvalidDifferenceSet,
    EvenOrder,
    EmptySubset,
    VertexOutOfRange,
    SyntaxError,
    InvariantViolation,
    SizeMismatch,
    RootInLeaves,
    EmptyLeaves,
    OrderTooLarge,
    ExhaustiveTooLarge,
    OrderTooSmall,
    PreconditionViolated,
    OrderTooLargeForExact,
    VerificationFailed,
};

auto to_string(ErrorCode code) -> std::string_view;

/// The single exception type thrown by the library. Callers that need to
/// distinguish failures switch on code().
class KaryError : public std::runtime_error
{
public:
    KaryError(ErrorCode code, const std::string & what);

    auto code() const noexcept -> ErrorCode { return _code; }

private:
    ErrorCode _code;
};

[[noreturn]] void fail(ErrorCode code, const std::string & detail);

}
