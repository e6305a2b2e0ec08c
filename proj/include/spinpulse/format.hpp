#pragma once

#include <string>

namespace spinpulse {

/// Scientific notation with 9 significant digits, e.g. "3.00000000e-01".
/// Negative zero is normalized to "0.00000000e+00" so equal values always
/// serialize to equal bytes.
std::string format_sig9(double value);

}  // namespace spinpulse
