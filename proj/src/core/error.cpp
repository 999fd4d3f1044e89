#include "core/error.hpp"

namespace orbit_euler {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kNotInvertible: return "NotInvertible";
    case ErrorCode::kNotNormal: return "NotNormal";
    case ErrorCode::kNotPSubgroup: return "NotPSubgroup";
    case ErrorCode::kNotClosed: return "NotClosed";
    case ErrorCode::kNoWeighting: return "NoWeighting";
    case ErrorCode::kNoEulerCharacteristic: return "NoEulerCharacteristic";
    case ErrorCode::kNonIntegral: return "NonIntegral";
    case ErrorCode::kNonExactDivision: return "NonExactDivision";
    case ErrorCode::kNotLieCatalog: return "NotLieCatalog";
    case ErrorCode::kNotADivisor: return "NotADivisor";
    case ErrorCode::kPDividesQ: return "PDividesQ";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInconsistent: return "Inconsistent";
  }
  return "Unknown";
}

}  // namespace orbit_euler
