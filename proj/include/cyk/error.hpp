#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyk {

/// Stable error codes. The names returned by error_code_name() are part of
/// the CLI report format and must not change.
enum class ErrorCode {
  InvalidArgument,
  MalformedInput,
  DuplicateBranchPoint,
  EvenCount,
  UnsupportedComplexBranchPoints,
  QuadratureFailure,
  SingularABlock,
  PathThroughBranchPoint,
  NotPositiveDefinite,
  NonSquare,
  NotInDomain,
  SingularDenominator,
  ParityMismatch,
  InconsistentDims,
  DimensionMismatch,
  NonConstantBasis,
  StepTooLarge,
  NotGeneralPosition,
  GTooLarge,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// Input errors map to CLI exit code 2, everything else to 1.
bool is_input_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cyk
