#pragma once

#include <stdexcept>
#include <string>

namespace spinpulse {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Precondition violations, named per operation contract.
struct NotNormalized : Error { using Error::Error; };
struct BadAxis : Error { using Error::Error; };
struct GeometryViolation : Error { using Error::Error; };
struct NonNormalizedProfile : Error { using Error::Error; };
struct StepCountTooSmall : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct IndexOutOfBand : Error { using Error::Error; };
struct ZeroNorm : Error { using Error::Error; };
struct NegativeInput : Error { using Error::Error; };
struct NonPositiveInput : Error { using Error::Error; };
struct NonPositiveDuration : Error { using Error::Error; };
struct BadRange : Error { using Error::Error; };

}  // namespace spinpulse
