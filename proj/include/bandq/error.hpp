#pragma once

#include <stdexcept>
#include <string>

namespace bandq {

enum class ErrorCode {
  ParseError,
  NonSquare,
  ZeroDenominator,
  DimensionMismatch,
  IndexOutOfRange,
  NotBdswShape,
  SingularPivot,
  CapExceeded,
  NotR0,
  ResampleBudgetExhausted,
  NotPositive,
  WrongStructure,
  AlgebraMismatch,
  NotSymmetric,
  DomainError,
  EigenSolverFailure,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bandq
