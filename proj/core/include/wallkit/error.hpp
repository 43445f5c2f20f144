#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wallkit {

enum class ErrorCode {
  kUnknownName,
  kUnknownBlock,
  kLatticeMismatch,
  kZeroVector,
  kImprimitive,
  kDegenerate,
  kNotNegativeDefinite,
  kNotInDual,
  kZeroNorm,
  kNonIntegral,
  kNotIsometry,
  kPreconditionViolated,
  kInvariantMismatch,
  kNoUSquare,
  kInfeasibleInvariants,
  kInternalMismatch,
  kNotPositive,
  kOmegaOnWall,
  kNotSaturated,
  kInvalidArgument,
};

// Stable machine-readable identifier, e.g. "NonIntegral".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wallkit
