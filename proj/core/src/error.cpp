#include "wallkit/error.hpp"

namespace wallkit {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownName: return "UnknownName";
    case ErrorCode::kUnknownBlock: return "UnknownBlock";
    case ErrorCode::kLatticeMismatch: return "LatticeMismatch";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kImprimitive: return "Imprimitive";
    case ErrorCode::kDegenerate: return "Degenerate";
    case ErrorCode::kNotNegativeDefinite: return "NotNegativeDefinite";
    case ErrorCode::kNotInDual: return "NotInDual";
    case ErrorCode::kZeroNorm: return "ZeroNorm";
    case ErrorCode::kNonIntegral: return "NonIntegral";
    case ErrorCode::kNotIsometry: return "NotIsometry";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kInvariantMismatch: return "InvariantMismatch";
    case ErrorCode::kNoUSquare: return "NoUSquare";
    case ErrorCode::kInfeasibleInvariants: return "InfeasibleInvariants";
    case ErrorCode::kInternalMismatch: return "InternalMismatch";
    case ErrorCode::kNotPositive: return "NotPositive";
    case ErrorCode::kOmegaOnWall: return "OmegaOnWall";
    case ErrorCode::kNotSaturated: return "NotSaturated";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string const& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

}  // namespace wallkit
