#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace declutter {

enum class ErrorCode {
  kSelfLoop,
  kDuplicateEdge,
  kNodeOutOfRange,
  kEdgeNotFound,
  kInvalidSize,
  kNotEnoughPairs,
  kDegenerateInput,
  kParseError,
  kInvariantViolation,
  kTooFewPoints,
  kDimensionMismatch,
  kEmptyFootprint,
  kNoAugEdges,
  kNumericalDivergence,
  kDegenerateGeometry,
  kNoIncidentPairs,
  kDegenerateLayout,
  kAllZeroDifferences,
  kEmptyInput,
  kInvalidConfig,
  kMissingLayout,
  kIncompleteRecords,
  kMismatchedFiles,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure in the library surfaces as this exception; `code()` lets
// callers and tests distinguish the contract violation.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace declutter
