#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "spinpulse/errors.hpp"
#include "spinpulse/format.hpp"
#include "spinpulse/laser.hpp"
#include "spinpulse/oracle.hpp"
#include "spinpulse/pulse_profile.hpp"
#include "spinpulse/reports.hpp"
#include "spinpulse/transfer.hpp"
#include "spinpulse/wave_grid.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumericalQuality = 2;

const std::vector<std::string> kCommands = {"transfer", "sweep",  "oracle",
                                            "spatial",  "laser", "figure1"};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

/// Plain key=value lines; blank lines and #-comments allowed.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw spinpulse::Error("cannot open config file: " + path);
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw spinpulse::Error("config line is not key=value: " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw spinpulse::Error("config line has an empty key: " + line);
    entries.emplace_back(key, value);
  }
  return entries;
}

bool truthy(const std::string& v) { return v == "true" || v == "1" || v == "yes" || v == "on"; }
bool falsey(const std::string& v) { return v == "false" || v == "0" || v == "no" || v == "off"; }

/// Pulls --config out of args (CLI11 never sees it) and splices the file's
/// key=value entries in right after the subcommand token, so flags given on
/// the command line land later and win under the take-last policy.
void apply_config(CLI::App& app, std::vector<std::string>& args) {
  std::string config_path;
  for (std::size_t k = 0; k < args.size();) {
    if (args[k] == "--config") {
      if (k + 1 >= args.size()) throw spinpulse::Error("--config needs a file path");
      config_path = args[k + 1];
      args.erase(args.begin() + static_cast<long>(k), args.begin() + static_cast<long>(k) + 2);
    } else if (args[k].rfind("--config=", 0) == 0) {
      config_path = args[k].substr(9);
      args.erase(args.begin() + static_cast<long>(k));
    } else {
      ++k;
    }
  }
  if (config_path.empty()) return;
  if (args.empty() || std::find(kCommands.begin(), kCommands.end(), args[0]) == kCommands.end())
    throw spinpulse::Error("--config requires a leading command name");

  CLI::App* sub = app.get_subcommand(args[0]);
  std::vector<std::string> injected;
  for (const auto& [key, value] : read_config_file(config_path)) {
    if (key == "config") throw spinpulse::Error("config files cannot nest: key 'config'");
    const CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr)
      throw spinpulse::Error("unknown config key for '" + args[0] + "': " + key);
    if (opt->get_expected_min() == 0) {
      if (truthy(value)) injected.push_back("--" + key);
      else if (!falsey(value))
        throw spinpulse::Error("config key '" + key + "' is a flag; use true/false");
    } else {
      injected.push_back("--" + key + "=" + value);
    }
  }
  args.insert(args.begin() + 1, injected.begin(), injected.end());
}

class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (path.empty()) return;
    file_.open(path, std::ios::binary);
    if (!file_) throw spinpulse::Error("cannot open output file: " + path);
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<double> parse_width_list(const std::string& csv) {
  std::vector<double> widths;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw spinpulse::Error("bad width value: " + item);
    }
    if (used != item.size()) throw spinpulse::Error("bad width value: " + item);
    widths.push_back(v);
  }
  if (widths.empty()) throw spinpulse::Error("width list is empty");
  return widths;
}

spinpulse::Spinor named_polarization(const std::string& name) {
  using spinpulse::complexd;
  const double r = 1.0 / std::sqrt(2.0);
  if (name == "up") return spinpulse::chi_up();
  if (name == "down") return spinpulse::chi_down();
  if (name == "xplus") return {complexd(r), complexd(r)};
  return {complexd(r), complexd(0.0, r)};  // yplus
}

struct TransferArgs {
  double bx = 0.0, by = 0.0, bz = 0.0;
  double a = 0.5;
  bool flip = false;
  bool expectations = false;
  std::string out;
};

struct RangeArgs {
  double bmin = 0.0, bmax = 6.0, step = 0.01;
  std::string out;
};

struct OracleArgs {
  double bx = 0.3, by = 0.0, bz = 0.0;
  std::string profile = "box";
  double width = 1.0;
  int steps = 4096;
  std::string widths;
  double defect_threshold = 1e-9;
  std::string out;
};

struct SpatialArgs {
  std::size_t n = 256;
  double length = 64.0;
  long momentum_index = 0;
  std::string polarization = "up";
  double bx = 0.0, by = 0.0, bz = 0.0;
  bool step_profile = false;
  double dt_before = 0.0, dt_after = 0.0;
  bool spectrum = false;
  std::string out;
};

struct LaserArgs {
  double intensity = 5.5e26;
  double energy = 5.0;
  double duration = 2e-14;
  double area = 2e-12;
  bool csv = false;
  std::string out;
};

void add_common(CLI::App* sub, std::string& out) {
  sub->add_option("--out", out, "write output to this file instead of stdout")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  sub->add_option("--config", "key=value file; command-line flags override it")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
}

CLI::Option* last_wins(CLI::Option* opt) {
  return opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
}

int run_transfer(const TransferArgs& a) {
  using namespace spinpulse;
  const CouplingVector b{a.bx, a.by, a.bz};
  const AssociationConstant assoc{a.a};
  const Operator2x2 u = general_a_transfer(assoc, b);
  // Evaluate the requested observables before emitting anything, so a
  // geometry failure cannot leave a half-written report behind.
  double flip = 0.0;
  BlochVector expectations;
  if (a.flip) flip = spin_flip_probability(b);
  if (a.expectations) expectations = post_pulse_expectations(b);

  OutputTarget target(a.out);
  std::ostream& out = target.stream();
  out << "bx=" << format_sig9(b.bx) << '\n';
  out << "by=" << format_sig9(b.by) << '\n';
  out << "bz=" << format_sig9(b.bz) << '\n';
  out << "coupling=" << format_sig9(b.magnitude()) << '\n';
  out << "association_a=" << format_sig9(assoc.value) << '\n';
  out << "rotation_angle=" << format_sig9(rotation_angle(b)) << '\n';
  const char* names[4] = {"u00", "u01", "u10", "u11"};
  for (int k = 0; k < 4; ++k) {
    out << names[k] << "_re=" << format_sig9(u.e[k].real()) << '\n';
    out << names[k] << "_im=" << format_sig9(u.e[k].imag()) << '\n';
  }
  out << "unitarity_defect=" << format_sig9(unitarity_defect(u)) << '\n';
  out << "norm_ratio=" << format_sig9(norm_ratio(assoc, b.magnitude())) << '\n';
  if (a.flip) out << "flip_probability=" << format_sig9(flip) << '\n';
  if (a.expectations) {
    out << "s_x_hbar2=" << format_sig9(expectations.x) << '\n';
    out << "s_y_hbar2=" << format_sig9(expectations.y) << '\n';
    out << "s_z_hbar2=" << format_sig9(expectations.z) << '\n';
  }
  return kExitOk;
}

int run_oracle(const OracleArgs& a) {
  using namespace spinpulse;
  OutputTarget target(a.out);
  std::ostream& out = target.stream();
  const CouplingVector b{a.bx, a.by, a.bz};
  const ProfileKind kind = a.profile == "box" ? ProfileKind::box : ProfileKind::gaussian;

  if (!a.widths.empty()) {
    const std::vector<double> widths = parse_width_list(a.widths);
    const auto points = convergence_study(b, kind, widths, a.steps);
    write_convergence_csv(out, points);
    for (const auto& p : points)
      if (p.defect > a.defect_threshold) {
        std::cerr << "unitarity defect " << format_sig9(p.defect) << " above threshold "
                  << format_sig9(a.defect_threshold) << " at width " << format_sig9(p.width)
                  << '\n';
        return kExitNumericalQuality;
      }
    return kExitOk;
  }

  const PulseProfile profile =
      kind == ProfileKind::box ? PulseProfile::box(a.width) : PulseProfile::gaussian(a.width);
  const PropagatorResult result = integrate_spin_ode(profile, b, a.steps);
  out << "profile=" << a.profile << '\n';
  out << "width=" << format_sig9(a.width) << '\n';
  out << "steps=" << result.steps << '\n';
  out << "coupling=" << format_sig9(b.magnitude()) << '\n';
  out << "unitarity_defect=" << format_sig9(result.unitarity_defect) << '\n';
  out << "gap_to_exponential="
      << format_sig9(max_abs_diff(result.propagator, fixed_axis_exponential(b))) << '\n';
  out << "gap_to_impulsive=" << format_sig9(max_abs_diff(result.propagator, delta_transfer(b)))
      << '\n';
  if (result.unitarity_defect > a.defect_threshold) {
    std::cerr << "unitarity defect " << format_sig9(result.unitarity_defect)
              << " above threshold " << format_sig9(a.defect_threshold) << '\n';
    return kExitNumericalQuality;
  }
  return kExitOk;
}

int run_spatial(const SpatialArgs& a) {
  using namespace spinpulse;
  OutputTarget target(a.out);
  std::ostream& out = target.stream();

  WaveGrid grid = make_plane_wave(a.length, a.n, a.momentum_index,
                                  named_polarization(a.polarization));
  const double norm_before = grid.discrete_norm2();

  if (a.dt_before != 0.0) grid = free_propagate(grid, a.dt_before);

  FieldProfile field;
  field.values.assign(a.n, CouplingVector{a.bx, a.by, a.bz});
  if (a.step_profile)
    for (std::size_t k = 0; k < a.n; ++k)
      if (grid.x(k) >= 0.5 * a.length) field.values[k] = CouplingVector{};
  grid = apply_pulse_pointwise(grid, field);

  if (a.dt_after != 0.0) grid = free_propagate(grid, a.dt_after);

  if (a.spectrum)
    write_spectrum_csv(out, grid);
  else
    write_grid_csv(out, grid);

  const double drift = std::abs(grid.discrete_norm2() / norm_before - 1.0);
  if (drift > 1e-10) {
    std::cerr << "norm drift " << format_sig9(drift) << " above 1e-10\n";
    return kExitNumericalQuality;
  }
  return kExitOk;
}

int run_laser(const LaserArgs& a) {
  using namespace spinpulse;
  OutputTarget target(a.out);
  const LaserPulseSpec spec{a.intensity, a.energy, a.duration, a.area};
  const ScenarioReport report = scenario_report(spec);
  if (a.csv)
    write_scenario_csv(target.stream(), report);
  else
    write_scenario_report(target.stream(), report);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"impulsive magnetic pulse acting on a spin-1/2 beam: transfer matrices, "
               "finite-width checks, spatial propagation, and laser-scale estimates"};
  app.require_subcommand(1);

  TransferArgs transfer_args;
  CLI::App* transfer = app.add_subcommand(
      "transfer", "impulsive transfer matrix and post-pulse observables");
  last_wins(transfer->add_option("--bx", transfer_args.bx, "coupling x component"));
  last_wins(transfer->add_option("--by", transfer_args.by, "coupling y component"));
  last_wins(transfer->add_option("--bz", transfer_args.bz, "coupling z component"));
  last_wins(transfer->add_option("--a", transfer_args.a,
                                 "association constant (1/2 conserves probability)"));
  transfer->add_flag("--flip", transfer_args.flip, "also print the spin-flip probability");
  transfer->add_flag("--expectations", transfer_args.expectations,
                     "also print post-pulse spin expectations");
  add_common(transfer, transfer_args.out);

  RangeArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep", "observables vs coupling as CSV");
  last_wins(sweep->add_option("--bmin", sweep_args.bmin, "first coupling value"));
  last_wins(sweep->add_option("--bmax", sweep_args.bmax, "last coupling value"));
  last_wins(sweep->add_option("--step", sweep_args.step, "coupling increment"));
  add_common(sweep, sweep_args.out);

  RangeArgs figure1_args;
  CLI::App* figure1 =
      app.add_subcommand("figure1", "post-pulse S_y and S_z vs coupling as CSV");
  last_wins(figure1->add_option("--bmin", figure1_args.bmin, "first coupling value"));
  last_wins(figure1->add_option("--bmax", figure1_args.bmax, "last coupling value"));
  last_wins(figure1->add_option("--step", figure1_args.step, "coupling increment"));
  add_common(figure1, figure1_args.out);

  OracleArgs oracle_args;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "finite-width pulse integration and gaps to the closed forms");
  last_wins(oracle->add_option("--bx", oracle_args.bx, "coupling x component"));
  last_wins(oracle->add_option("--by", oracle_args.by, "coupling y component"));
  last_wins(oracle->add_option("--bz", oracle_args.bz, "coupling z component"));
  last_wins(oracle->add_option("--profile", oracle_args.profile, "pulse envelope")
                ->check(CLI::IsMember({"box", "gaussian"})));
  last_wins(oracle->add_option("--width", oracle_args.width, "envelope width"));
  last_wins(oracle->add_option("--steps", oracle_args.steps, "integrator steps (>= 16)"));
  last_wins(oracle->add_option(
      "--widths", oracle_args.widths,
      "comma-separated decreasing widths; emits a convergence CSV instead"));
  last_wins(oracle->add_option("--defect-threshold", oracle_args.defect_threshold,
                               "max unitarity defect before exit code 2"));
  add_common(oracle, oracle_args.out);

  SpatialArgs spatial_args;
  CLI::App* spatial = app.add_subcommand(
      "spatial", "plane wave through a pointwise pulse on a periodic grid");
  last_wins(spatial->add_option("--n", spatial_args.n, "grid points (power of two)"));
  last_wins(spatial->add_option("--length", spatial_args.length, "box length"));
  last_wins(spatial->add_option("--momentum-index", spatial_args.momentum_index,
                                "signed mode index in [-N/2, N/2)"));
  last_wins(spatial->add_option("--polarization", spatial_args.polarization, "initial spin")
                ->check(CLI::IsMember({"up", "down", "xplus", "yplus"})));
  last_wins(spatial->add_option("--bx", spatial_args.bx, "coupling x component"));
  last_wins(spatial->add_option("--by", spatial_args.by, "coupling y component"));
  last_wins(spatial->add_option("--bz", spatial_args.bz, "coupling z component"));
  spatial->add_flag("--step-profile", spatial_args.step_profile,
                    "apply the pulse only on the left half of the box");
  last_wins(spatial->add_option("--dt-before", spatial_args.dt_before,
                                "free flight before the pulse"));
  last_wins(spatial->add_option("--dt-after", spatial_args.dt_after,
                                "free flight after the pulse"));
  spatial->add_flag("--spectrum", spatial_args.spectrum,
                    "emit the momentum spectrum instead of the grid");
  add_common(spatial, spatial_args.out);

  LaserArgs laser_args;
  CLI::App* laser = app.add_subcommand(
      "laser", "SI field estimates and pulse observables for a laser spec");
  last_wins(laser->add_option("--intensity", laser_args.intensity, "peak intensity, W/m^2"));
  last_wins(laser->add_option("--energy", laser_args.energy, "total pulse energy, J"));
  last_wins(laser->add_option("--duration", laser_args.duration, "pulse duration, s"));
  last_wins(laser->add_option("--area", laser_args.area, "cross-sectional area, m^2"));
  laser->add_flag("--csv", laser_args.csv, "emit a single-row CSV instead of key=value");
  add_common(laser, laser_args.out);

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    apply_config(app, args);
    std::vector<const char*> cargv;
    cargv.push_back(argv[0]);
    for (const auto& s : args) cargv.push_back(s.c_str());
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  } catch (const spinpulse::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    if (app.got_subcommand(transfer)) return run_transfer(transfer_args);
    if (app.got_subcommand(sweep)) {
      OutputTarget target(sweep_args.out);
      spinpulse::write_sweep_csv(target.stream(), sweep_args.bmin, sweep_args.bmax,
                                 sweep_args.step);
      return kExitOk;
    }
    if (app.got_subcommand(figure1)) {
      OutputTarget target(figure1_args.out);
      spinpulse::write_figure1_csv(target.stream(), figure1_args.bmin, figure1_args.bmax,
                                   figure1_args.step);
      return kExitOk;
    }
    if (app.got_subcommand(oracle)) return run_oracle(oracle_args);
    if (app.got_subcommand(spatial)) return run_spatial(spatial_args);
    if (app.got_subcommand(laser)) return run_laser(laser_args);
  } catch (const spinpulse::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}
