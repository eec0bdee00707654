#include "discseq/error.hpp"

namespace discseq {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::PointOutsideDomain: return "PointOutsideDomain";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::PoleAtMinusOne: return "PoleAtMinusOne";
    case ErrorCode::PoleInput: return "PoleInput";
    case ErrorCode::DegenerateMap: return "DegenerateMap";
    case ErrorCode::NonpositiveEpsilon: return "NonpositiveEpsilon";
    case ErrorCode::NonpositiveParameter: return "NonpositiveParameter";
    case ErrorCode::OverflowGuard: return "OverflowGuard";
    case ErrorCode::BaseOffCurve: return "BaseOffCurve";
    case ErrorCode::BracketNotFound: return "BracketNotFound";
    case ErrorCode::OriginOutsideDc: return "OriginOutsideDc";
    case ErrorCode::RayEscapesDc: return "RayEscapesDc";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::TooFewTerms: return "TooFewTerms";
    case ErrorCode::BoundaryDistanceNotLessThanOne: return "BoundaryDistanceNotLessThanOne";
    case ErrorCode::NonincreasingWeight: return "NonincreasingWeight";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::UnsupportedDomain: return "UnsupportedDomain";
    case ErrorCode::SchemaError: return "SchemaError";
    }
    return "UnknownError";
}

} // namespace discseq
