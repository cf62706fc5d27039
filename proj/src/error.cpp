#include "cyk/error.hpp"

namespace cyk {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::DuplicateBranchPoint: return "DuplicateBranchPoint";
    case ErrorCode::EvenCount: return "EvenCount";
    case ErrorCode::UnsupportedComplexBranchPoints: return "UnsupportedComplexBranchPoints";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::SingularABlock: return "SingularABlock";
    case ErrorCode::PathThroughBranchPoint: return "PathThroughBranchPoint";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NotInDomain: return "NotInDomain";
    case ErrorCode::SingularDenominator: return "SingularDenominator";
    case ErrorCode::ParityMismatch: return "ParityMismatch";
    case ErrorCode::InconsistentDims: return "InconsistentDims";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonConstantBasis: return "NonConstantBasis";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::NotGeneralPosition: return "NotGeneralPosition";
    case ErrorCode::GTooLarge: return "GTooLarge";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::MalformedInput:
    case ErrorCode::DuplicateBranchPoint:
    case ErrorCode::EvenCount:
    case ErrorCode::UnsupportedComplexBranchPoints:
    case ErrorCode::NonSquare:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::GTooLarge:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

}  // namespace cyk
