#pragma once

#include <iosfwd>
#include <vector>

#include "spinpulse/laser.hpp"
#include "spinpulse/oracle.hpp"
#include "spinpulse/wave_grid.hpp"

namespace spinpulse {

/// Columns b, S_y, S_z over b = b_min + k*step up to b_max inclusive
/// (within rounding). Requires 0 <= b_min < b_max and step > 0 (BadRange).
void write_figure1_csv(std::ostream& out, double b_min, double b_max, double step);

/// Columns b, flip_probability, S_y, S_z, rotation_angle over the same range
/// convention as write_figure1_csv.
void write_sweep_csv(std::ostream& out, double b_min, double b_max, double step);

/// Columns width, defect, gap_to_exponential, one row per study point.
void write_convergence_csv(std::ostream& out, const std::vector<ConvergencePoint>& points);

/// Columns x, re_up, im_up, re_down, im_down, one row per grid site.
void write_grid_csv(std::ostream& out, const WaveGrid& grid);

/// Columns momentum_index, weight, rows in ascending signed index order
/// from -N/2 to N/2 - 1.
void write_spectrum_csv(std::ostream& out, const WaveGrid& grid);

/// Flat key=value block; units embedded in the key names.
void write_scenario_report(std::ostream& out, const ScenarioReport& report);

/// Single-row CSV with the same keys as write_scenario_report as the header.
void write_scenario_csv(std::ostream& out, const ScenarioReport& report);

}  // namespace spinpulse
