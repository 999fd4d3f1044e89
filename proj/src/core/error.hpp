#pragma once

#include <stdexcept>
#include <string>

namespace orbit_euler {

enum class ErrorCode {
  kParse = 1,
  kCapExceeded,
  kNotInvertible,
  kNotNormal,
  kNotPSubgroup,
  kNotClosed,
  kNoWeighting,
  kNoEulerCharacteristic,
  kNonIntegral,
  kNonExactDivision,
  kNotLieCatalog,
  kNotADivisor,
  kPDividesQ,
  kInvalidArgument,
  // Two independent computations of the same quantity disagreed.
  kInconsistent,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace orbit_euler
