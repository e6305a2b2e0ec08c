#include "spinpulse/reports.hpp"

#include <cmath>
#include <ostream>
#include <string>
#include <utility>

#include "spinpulse/errors.hpp"
#include "spinpulse/format.hpp"
#include "spinpulse/transfer.hpp"

namespace spinpulse {

namespace {

long row_count(double b_min, double b_max, double step) {
  if (!(b_min >= 0.0) || !(b_min < b_max) || !(step > 0.0))
    throw BadRange("need 0 <= b_min < b_max and step > 0");
  // The nudge keeps the intended endpoint when (b_max-b_min)/step rounds just
  // below an integer.
  return static_cast<long>(std::floor((b_max - b_min) / step + 1e-9));
}

std::vector<std::pair<std::string, double>> scenario_pairs(const ScenarioReport& r) {
  return {
      {"peak_intensity_w_m2", r.spec.peak_intensity},
      {"total_energy_j", r.spec.total_energy},
      {"duration_s", r.spec.duration},
      {"cross_section_m2", r.spec.cross_section},
      {"peak_B_tesla", r.peak_field},
      {"rms_B_tesla", r.rms_field},
      {"coupling_peak", r.peak.coupling},
      {"coupling_rms", r.rms.coupling},
      {"flip_probability_peak", r.peak.flip_probability},
      {"s_x_peak_hbar2", r.peak.s_x},
      {"s_y_peak_hbar2", r.peak.s_y},
      {"s_z_peak_hbar2", r.peak.s_z},
      {"flip_probability_rms", r.rms.flip_probability},
      {"s_x_rms_hbar2", r.rms.s_x},
      {"s_y_rms_hbar2", r.rms.s_y},
      {"s_z_rms_hbar2", r.rms.s_z},
  };
}

}  // namespace

void write_figure1_csv(std::ostream& out, double b_min, double b_max, double step) {
  const long rows = row_count(b_min, b_max, step);
  out << "b,S_y,S_z\n";
  for (long k = 0; k <= rows; ++k) {
    const double b = b_min + static_cast<double>(k) * step;
    const BlochVector s = post_pulse_expectations({b, 0.0, 0.0});
    out << format_sig9(b) << ',' << format_sig9(s.y) << ',' << format_sig9(s.z) << '\n';
  }
}

void write_sweep_csv(std::ostream& out, double b_min, double b_max, double step) {
  const long rows = row_count(b_min, b_max, step);
  out << "b,flip_probability,S_y,S_z,rotation_angle\n";
  for (long k = 0; k <= rows; ++k) {
    const double b = b_min + static_cast<double>(k) * step;
    const CouplingVector bv{b, 0.0, 0.0};
    const BlochVector s = post_pulse_expectations(bv);
    out << format_sig9(b) << ',' << format_sig9(spin_flip_probability(bv)) << ','
        << format_sig9(s.y) << ',' << format_sig9(s.z) << ',' << format_sig9(rotation_angle(bv))
        << '\n';
  }
}

void write_convergence_csv(std::ostream& out, const std::vector<ConvergencePoint>& points) {
  out << "width,defect,gap_to_exponential\n";
  for (const auto& p : points)
    out << format_sig9(p.width) << ',' << format_sig9(p.defect) << ','
        << format_sig9(p.gap_to_exponential) << '\n';
}

void write_grid_csv(std::ostream& out, const WaveGrid& grid) {
  out << "x,re_up,im_up,re_down,im_down\n";
  for (std::size_t k = 0; k < grid.points(); ++k) {
    const Spinor& v = grid.values[k];
    out << format_sig9(grid.x(k)) << ',' << format_sig9(v.up.real()) << ','
        << format_sig9(v.up.imag()) << ',' << format_sig9(v.down.real()) << ','
        << format_sig9(v.down.imag()) << '\n';
  }
}

void write_spectrum_csv(std::ostream& out, const WaveGrid& grid) {
  const std::vector<double> weights = momentum_spectrum(grid);
  const long half = static_cast<long>(grid.points()) / 2;
  out << "momentum_index,weight\n";
  for (long m = -half; m < half; ++m)
    out << m << ',' << format_sig9(weights[momentum_bin(m, grid.points())]) << '\n';
}

void write_scenario_report(std::ostream& out, const ScenarioReport& report) {
  for (const auto& [key, value] : scenario_pairs(report))
    out << key << '=' << format_sig9(value) << '\n';
}

void write_scenario_csv(std::ostream& out, const ScenarioReport& report) {
  const auto pairs = scenario_pairs(report);
  for (std::size_t k = 0; k < pairs.size(); ++k)
    out << pairs[k].first << (k + 1 < pairs.size() ? ',' : '\n');
  for (std::size_t k = 0; k < pairs.size(); ++k)
    out << format_sig9(pairs[k].second) << (k + 1 < pairs.size() ? ',' : '\n');
}

}  // namespace spinpulse
