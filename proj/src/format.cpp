#include "spinpulse/format.hpp"

#include <cstdio>

namespace spinpulse {

std::string format_sig9(double value) {
  if (value == 0.0) value = 0.0;  // drops the sign of -0.0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.8e", value);
  return buf;
}

}  // namespace spinpulse
