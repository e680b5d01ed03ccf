#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tlent {

enum class ErrorCode {
  DimensionMismatch,
  NotHermitian,
  NoConvergence,
  NumericError,
  InvalidSpec,
  NotNormalized,
  NonPositiveLoop,
  InvalidPermutation,
  NotDensityMatrix,
  SingularNormalization,
  InvalidParams,
  TemperatureNonPositive,
  LoopOutOfDomain,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  // Non-convergence and floating-point breakdown, as opposed to bad input.
  bool is_numerical() const noexcept {
    return code_ == ErrorCode::NoConvergence || code_ == ErrorCode::NumericError;
  }

 private:
  ErrorCode code_;
};

}  // namespace tlent
