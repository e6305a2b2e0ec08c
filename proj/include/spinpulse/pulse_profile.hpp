#pragma once

#include <utility>
#include <vector>

#include "spinpulse/errors.hpp"

namespace spinpulse {

enum class ProfileKind { box, gaussian, sampled };

/// Normalized temporal envelope f(t) with unit time integral: a finite-width
/// stand-in for delta(t).
///
/// box      : 1/width on [-width/2, width/2]
/// gaussian : standard deviation = width, truncated at +-6 widths and
///            renormalized to unit integral over the truncated support
/// sampled  : piecewise-linear through user samples, zero outside their range
class PulseProfile {
 public:
  static PulseProfile box(double width);
  static PulseProfile gaussian(double width);
  static PulseProfile sampled(std::vector<std::pair<double, double>> samples);

  ProfileKind kind() const { return kind_; }
  double width() const { return width_; }

  double value(double t) const;

  /// Support interval [start, stop]; f vanishes outside it.
  double start() const { return start_; }
  double stop() const { return stop_; }

  /// Time integral over the support. Exactly 1 for box and gaussian by
  /// construction; trapezoid rule on the samples for sampled profiles.
  double integral() const;

 private:
  PulseProfile() = default;

  ProfileKind kind_{ProfileKind::box};
  double width_{1.0};
  double start_{-0.5};
  double stop_{0.5};
  double gauss_scale_{0.0};  // 1 / (width * sqrt(2 pi) * erf(6/sqrt 2))
  std::vector<std::pair<double, double>> samples_;
};

}  // namespace spinpulse
