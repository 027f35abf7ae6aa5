#include "naimark/error.hpp"

namespace naimark {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NonSymmetric: return "NonSymmetric";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::NotPsd: return "NotPsd";
    case ErrorCode::ZeroMatrix: return "ZeroMatrix";
    case ErrorCode::FullRank: return "FullRank";
    case ErrorCode::RowsNotOrthonormal: return "RowsNotOrthonormal";
    case ErrorCode::NoRoomToComplete: return "NoRoomToComplete";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NonOrthonormalColumns: return "NonOrthonormalColumns";
    case ErrorCode::NotSpanning: return "NotSpanning";
    case ErrorCode::NotParseval: return "NotParseval";
    case ErrorCode::NotProjection: return "NotProjection";
    case ErrorCode::RankZero: return "RankZero";
    case ErrorCode::NotScalable: return "NotScalable";
    case ErrorCode::LpNumericalFailure: return "LpNumericalFailure";
    case ErrorCode::TooManyColumns: return "TooManyColumns";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::UnequalSizes: return "UnequalSizes";
    case ErrorCode::NonMatroidFamily: return "NonMatroidFamily";
    case ErrorCode::InvalidShape: return "InvalidShape";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::UnknownMap: return "UnknownMap";
    case ErrorCode::UnknownProperty: return "UnknownProperty";
  }
  return "UnknownError";
}

}  // namespace naimark
