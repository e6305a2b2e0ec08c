#include "spinpulse/laser.hpp"

#include <cmath>

#include "spinpulse/errors.hpp"
#include "spinpulse/transfer.hpp"

namespace spinpulse {

double peak_field_from_intensity(double intensity) {
  if (intensity < 0.0) throw NegativeInput("intensity must be non-negative");
  return std::sqrt(constants::mu0 * intensity / constants::c);
}

double rms_field_from_energy(double energy, double duration, double cross_section) {
  if (!(energy > 0.0)) throw NonPositiveInput("energy must be positive");
  if (!(duration > 0.0)) throw NonPositiveInput("duration must be positive");
  if (!(cross_section > 0.0)) throw NonPositiveInput("cross section must be positive");
  return std::sqrt(constants::mu0 * energy / (2.0 * constants::c * duration * cross_section));
}

double dimensionless_coupling(double field, double duration) {
  if (field < 0.0) throw NegativeInput("field must be non-negative");
  if (!(duration > 0.0)) throw NonPositiveDuration("duration must be positive");
  return constants::mu_neutron * duration * field / constants::hbar;
}

PulseObservables observables_at_coupling(double coupling) {
  const CouplingVector b{coupling, 0.0, 0.0};
  const BlochVector s = post_pulse_expectations(b);
  return PulseObservables{coupling, spin_flip_probability(b), s.x, s.y, s.z};
}

ScenarioReport scenario_report(const LaserPulseSpec& spec) {
  ScenarioReport report;
  report.spec = spec;
  report.peak_field = peak_field_from_intensity(spec.peak_intensity);
  // Zero pulse energy means zero average field; the conversion formula itself
  // requires a positive energy.
  report.rms_field = spec.total_energy == 0.0
                         ? 0.0
                         : rms_field_from_energy(spec.total_energy, spec.duration,
                                                 spec.cross_section);
  report.peak = observables_at_coupling(dimensionless_coupling(report.peak_field, spec.duration));
  report.rms = observables_at_coupling(dimensionless_coupling(report.rms_field, spec.duration));
  return report;
}

}  // namespace spinpulse
