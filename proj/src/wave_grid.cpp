#include "spinpulse/wave_grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <numbers>

#include "spinpulse/errors.hpp"
#include "spinpulse/transfer.hpp"

namespace spinpulse {

namespace {

bool power_of_two(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

// In-place complex DFT of one length-N component. sign is FFTW_FORWARD for
// analysis (followed by a 1/N scale) or FFTW_BACKWARD for synthesis.
void transform(std::vector<complexd>& data, int sign) {
  fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(data.size()),
                                    reinterpret_cast<fftw_complex*>(data.data()),
                                    reinterpret_cast<fftw_complex*>(data.data()), sign,
                                    FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  if (sign == FFTW_FORWARD)
    for (auto& v : data) v /= static_cast<double>(data.size());
}

}  // namespace

double WaveGrid::discrete_norm2() const {
  double acc = 0.0;
  for (const auto& v : values) acc += v.norm2();
  return length * acc / static_cast<double>(points());
}

WaveGrid make_wave_grid(double length, std::size_t points) {
  if (!(length > 0.0)) throw Error("grid length must be positive");
  if (!power_of_two(points)) throw Error("grid points must be a power of two, at least 2");
  WaveGrid w;
  w.length = length;
  w.values.assign(points, Spinor{});
  return w;
}

WaveGrid make_plane_wave(double length, std::size_t points, long momentum_index,
                         const Spinor& polarization) {
  WaveGrid w = make_wave_grid(length, points);
  const long half = static_cast<long>(points) / 2;
  if (momentum_index < -half || momentum_index >= half)
    throw IndexOutOfBand("momentum index must lie in [-N/2, N/2)");
  if (std::abs(polarization.norm() - 1.0) > 1e-9)
    throw NotNormalized("polarization must be normalized");
  const double p = 2.0 * std::numbers::pi * static_cast<double>(momentum_index) / length;
  for (std::size_t k = 0; k < points; ++k) {
    const complexd phase = std::exp(complexd(0.0, p * w.x(k)));
    w.values[k] = phase * polarization;
  }
  return w;
}

WaveGrid apply_pulse_pointwise(const WaveGrid& w, const FieldProfile& f) {
  if (w.values.size() != f.values.size())
    throw LengthMismatch("grid and field profile lengths differ");
  WaveGrid out = w;
  for (std::size_t k = 0; k < w.values.size(); ++k)
    out.values[k] = apply(delta_transfer(f.values[k]), w.values[k]);
  return out;
}

WaveGrid free_propagate(const WaveGrid& w, double dt) {
  if (!std::isfinite(dt)) throw Error("dt must be finite");
  const std::size_t n = w.points();
  std::vector<complexd> up(n), down(n);
  for (std::size_t k = 0; k < n; ++k) {
    up[k] = w.values[k].up;
    down[k] = w.values[k].down;
  }
  transform(up, FFTW_FORWARD);
  transform(down, FFTW_FORWARD);
  for (std::size_t k = 0; k < n; ++k) {
    const double p = momentum_value(k, n, w.length);
    const complexd phase = std::exp(complexd(0.0, -0.5 * p * p * dt));
    up[k] *= phase;
    down[k] *= phase;
  }
  transform(up, FFTW_BACKWARD);
  transform(down, FFTW_BACKWARD);
  WaveGrid out = w;
  for (std::size_t k = 0; k < n; ++k) out.values[k] = Spinor{up[k], down[k]};
  return out;
}

std::vector<double> momentum_spectrum(const WaveGrid& w) {
  const std::size_t n = w.points();
  std::vector<complexd> up(n), down(n);
  for (std::size_t k = 0; k < n; ++k) {
    up[k] = w.values[k].up;
    down[k] = w.values[k].down;
  }
  transform(up, FFTW_FORWARD);
  transform(down, FFTW_FORWARD);
  std::vector<double> weights(n);
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    weights[k] = std::norm(up[k]) + std::norm(down[k]);
    total += weights[k];
  }
  if (total <= 0.0) throw ZeroNorm("cannot normalize the spectrum of a zero grid");
  for (auto& v : weights) v /= total;
  return weights;
}

std::size_t momentum_bin(long momentum_index, std::size_t points) {
  const long half = static_cast<long>(points) / 2;
  if (momentum_index < -half || momentum_index >= half)
    throw IndexOutOfBand("momentum index must lie in [-N/2, N/2)");
  return static_cast<std::size_t>(momentum_index >= 0
                                      ? momentum_index
                                      : momentum_index + static_cast<long>(points));
}

double momentum_value(std::size_t bin, std::size_t points, double length) {
  const long n = static_cast<long>(points);
  const long m = static_cast<long>(bin) < n / 2 ? static_cast<long>(bin)
                                                : static_cast<long>(bin) - n;
  return 2.0 * std::numbers::pi * static_cast<double>(m) / length;
}

}  // namespace spinpulse
