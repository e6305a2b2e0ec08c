#pragma once

#include <cstddef>
#include <vector>

#include "spinpulse/spinor.hpp"
#include "spinpulse/transfer.hpp"

namespace spinpulse {

/// Periodic 1-D grid of spinor samples psi(x_k), x_k = k L / N, in units
/// hbar = m = 1. N must be a power of two so the spectral step stays exact.
struct WaveGrid {
  double length = 0.0;
  std::vector<Spinor> values;

  std::size_t points() const { return values.size(); }
  double x(std::size_t k) const { return length * static_cast<double>(k) / points(); }

  /// (L/N) * sum_k ||psi(x_k)||^2; conserved by the pulse and by free flight.
  double discrete_norm2() const;
};

/// Per-site dimensionless couplings b(x_k).
struct FieldProfile {
  std::vector<CouplingVector> values;
};

/// Zero-initialized grid. Throws Error unless points is a power of two >= 2.
WaveGrid make_wave_grid(double length, std::size_t points);

/// values[k] = polarization * exp(i p x_k) with p = 2 pi m / L.
/// momentum_index m must lie in [-N/2, N/2); polarization must be normalized.
/// Discrete norm comes out as L exactly.
WaveGrid make_plane_wave(double length, std::size_t points, long momentum_index,
                         const Spinor& polarization);

/// Impulsive pulse: values[k] = delta_transfer(f.values[k]) * w.values[k].
/// Conserves the discrete norm exactly up to rounding.
WaveGrid apply_pulse_pointwise(const WaveGrid& w, const FieldProfile& f);

/// Free flight for time dt: each momentum mode p gains phase exp(-i p^2 dt / 2),
/// the same for both spin components. Exact per mode; no time-stepping error.
WaveGrid free_propagate(const WaveGrid& w, double dt);

/// weight[m] = |mode m|^2 summed over spin components, normalized to total 1.
/// Modes are indexed in transform-bin order (see momentum_value for the map to
/// signed indices). Throws ZeroNorm on an all-zero grid.
std::vector<double> momentum_spectrum(const WaveGrid& w);

/// Transform bin for a signed momentum index in [-N/2, N/2).
std::size_t momentum_bin(long momentum_index, std::size_t points);

/// Signed momentum p = 2 pi m / L for transform bin k (m = k for k < N/2,
/// m = k - N otherwise).
double momentum_value(std::size_t bin, std::size_t points, double length);

}  // namespace spinpulse
