#include "spinpulse/pulse_profile.hpp"

#include <algorithm>
#include <cmath>

namespace spinpulse {

namespace {
constexpr double kTruncationSigmas = 6.0;
}

PulseProfile PulseProfile::box(double width) {
  if (!(width > 0.0) || !std::isfinite(width)) throw Error("profile width must be positive");
  PulseProfile p;
  p.kind_ = ProfileKind::box;
  p.width_ = width;
  p.start_ = -0.5 * width;
  p.stop_ = 0.5 * width;
  return p;
}

PulseProfile PulseProfile::gaussian(double width) {
  if (!(width > 0.0) || !std::isfinite(width)) throw Error("profile width must be positive");
  PulseProfile p;
  p.kind_ = ProfileKind::gaussian;
  p.width_ = width;
  p.start_ = -kTruncationSigmas * width;
  p.stop_ = kTruncationSigmas * width;
  const double mass = std::erf(kTruncationSigmas / std::sqrt(2.0));
  p.gauss_scale_ = 1.0 / (width * std::sqrt(2.0 * M_PI) * mass);
  return p;
}

PulseProfile PulseProfile::sampled(std::vector<std::pair<double, double>> samples) {
  if (samples.size() < 2) throw Error("sampled profile needs at least two samples");
  for (std::size_t k = 1; k < samples.size(); ++k)
    if (!(samples[k].first > samples[k - 1].first))
      throw Error("sampled profile times must be strictly increasing");
  PulseProfile p;
  p.kind_ = ProfileKind::sampled;
  p.start_ = samples.front().first;
  p.stop_ = samples.back().first;
  p.width_ = p.stop_ - p.start_;
  p.samples_ = std::move(samples);
  return p;
}

double PulseProfile::value(double t) const {
  if (t < start_ || t > stop_) return 0.0;
  switch (kind_) {
    case ProfileKind::box:
      return 1.0 / width_;
    case ProfileKind::gaussian:
      return gauss_scale_ * std::exp(-0.5 * (t / width_) * (t / width_));
    case ProfileKind::sampled: {
      const auto it = std::upper_bound(
          samples_.begin(), samples_.end(), t,
          [](double v, const std::pair<double, double>& s) { return v < s.first; });
      if (it == samples_.begin()) return samples_.front().second;
      if (it == samples_.end()) return samples_.back().second;
      const auto& [t1, f1] = *it;
      const auto& [t0, f0] = *(it - 1);
      const double w = (t - t0) / (t1 - t0);
      return f0 + w * (f1 - f0);
    }
  }
  return 0.0;
}

double PulseProfile::integral() const {
  if (kind_ != ProfileKind::sampled) return 1.0;
  double acc = 0.0;
  for (std::size_t k = 1; k < samples_.size(); ++k)
    acc += 0.5 * (samples_[k].second + samples_[k - 1].second) *
           (samples_[k].first - samples_[k - 1].first);
  return acc;
}

}  // namespace spinpulse
