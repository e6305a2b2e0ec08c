#pragma once

#include "spinpulse/errors.hpp"

namespace spinpulse {

/// Frozen constants: neutron magnetic moment magnitude and CODATA values.
/// No runtime lookup, so reports are bit-reproducible.
namespace constants {
inline constexpr double mu_neutron = 0.96623645e-26;  // J/T
inline constexpr double hbar = 1.054571817e-34;       // J s
inline constexpr double mu0 = 1.25663706212e-6;       // T m/A
inline constexpr double c = 299792458.0;              // m/s
}  // namespace constants

/// SI description of a laser pulse.
struct LaserPulseSpec {
  double peak_intensity = 0.0;  // W/m^2
  double total_energy = 0.0;    // J
  double duration = 0.0;        // s
  double cross_section = 0.0;   // m^2
};

/// B = sqrt(mu0 I / c), the peak magnetic field of a plane electromagnetic
/// wave of intensity I. Throws NegativeInput.
double peak_field_from_intensity(double intensity);

/// B = sqrt(mu0 E / (2 c tau A)), the field estimated from the pulse energy
/// averaged over the pulse volume. Throws NonPositiveInput.
double rms_field_from_energy(double energy, double duration, double cross_section);

/// |b| = mu tau B / hbar, the dimensionless coupling driving all pulse
/// observables. Throws NegativeInput for B < 0, NonPositiveDuration.
double dimensionless_coupling(double field, double duration);

/// Spin observables of an initially spin-up neutron after a pulse with the
/// field along x at the given coupling. Expectations are in units of hbar/2.
struct PulseObservables {
  double coupling = 0.0;
  double flip_probability = 0.0;
  double s_x = 0.0;
  double s_y = 0.0;
  double s_z = 1.0;
};

PulseObservables observables_at_coupling(double coupling);

/// Full estimation chain for one laser spec. Peak and rms regimes are both
/// reported: the two differ by the ratio of peak to volume-averaged field.
struct ScenarioReport {
  LaserPulseSpec spec;
  double peak_field = 0.0;  // T
  double rms_field = 0.0;   // T
  PulseObservables peak;
  PulseObservables rms;
};

/// Throws on invalid inputs as the chained operations do; a zero-energy,
/// zero-intensity spec is valid and yields zero couplings.
ScenarioReport scenario_report(const LaserPulseSpec& spec);

}  // namespace spinpulse
