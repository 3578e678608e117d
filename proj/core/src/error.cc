#include "declutter/error.h"

namespace declutter {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kNodeOutOfRange: return "NodeOutOfRange";
    case ErrorCode::kEdgeNotFound: return "EdgeNotFound";
    case ErrorCode::kInvalidSize: return "InvalidSize";
    case ErrorCode::kNotEnoughPairs: return "NotEnoughPairs";
    case ErrorCode::kDegenerateInput: return "DegenerateInput";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
    case ErrorCode::kTooFewPoints: return "TooFewPoints";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kEmptyFootprint: return "EmptyFootprint";
    case ErrorCode::kNoAugEdges: return "NoAugEdges";
    case ErrorCode::kNumericalDivergence: return "NumericalDivergence";
    case ErrorCode::kDegenerateGeometry: return "DegenerateGeometry";
    case ErrorCode::kNoIncidentPairs: return "NoIncidentPairs";
    case ErrorCode::kDegenerateLayout: return "DegenerateLayout";
    case ErrorCode::kAllZeroDifferences: return "AllZeroDifferences";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kMissingLayout: return "MissingLayout";
    case ErrorCode::kIncompleteRecords: return "IncompleteRecords";
    case ErrorCode::kMismatchedFiles: return "MismatchedFiles";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace declutter
