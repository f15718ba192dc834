#include "bandq/error.hpp"

namespace bandq {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotBdswShape: return "NotBdswShape";
    case ErrorCode::SingularPivot: return "SingularPivot";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotR0: return "NotR0";
    case ErrorCode::ResampleBudgetExhausted: return "ResampleBudgetExhausted";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::WrongStructure: return "WrongStructure";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::EigenSolverFailure: return "EigenSolverFailure";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace bandq
