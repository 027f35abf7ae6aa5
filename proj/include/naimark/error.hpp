#pragma once

#include <stdexcept>
#include <string>

namespace naimark {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  IoError,
  NonSquare,
  NonSymmetric,
  NonConvergence,
  NotPsd,
  ZeroMatrix,
  FullRank,
  RowsNotOrthonormal,
  NoRoomToComplete,
  ShapeMismatch,
  NonOrthonormalColumns,
  NotSpanning,
  NotParseval,
  NotProjection,
  RankZero,
  NotScalable,
  LpNumericalFailure,
  TooManyColumns,
  EmptyFamily,
  UnequalSizes,
  NonMatroidFamily,
  InvalidShape,
  RankMismatch,
  OutOfRange,
  UnknownMap,
  UnknownProperty,
};

const char* to_string(ErrorCode code);

/// Exception carrying a stable error code alongside the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace naimark
