#pragma once

#include <stdexcept>
#include <string>

namespace discseq {

enum class ErrorCode {
    PointOutsideDomain,
    DimensionMismatch,
    PoleAtMinusOne,
    PoleInput,
    DegenerateMap,
    NonpositiveEpsilon,
    NonpositiveParameter,
    OverflowGuard,
    BaseOffCurve,
    BracketNotFound,
    OriginOutsideDc,
    RayEscapesDc,
    TooFewPoints,
    TooFewTerms,
    BoundaryDistanceNotLessThanOne,
    NonincreasingWeight,
    UnsupportedFamily,
    UnsupportedDomain,
    SchemaError,
};

const char* error_code_name(ErrorCode code);

/// Library error carrying a stable machine-readable code plus a human message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace discseq
