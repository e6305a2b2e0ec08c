#include "spinpulse/oracle.hpp"

#include <cmath>

#include "spinpulse/errors.hpp"

namespace spinpulse {

namespace {

constexpr double kProfileNormTol = 1e-9;
constexpr int kMinSteps = 16;

Operator2x2 scaled_generator(const CouplingVector& b) {
  // -i (sigma . b); right-multiplying factors are premultiplied by f(t) later.
  return complexd(0.0, -1.0) * sigma_dot(b);
}

}  // namespace

PropagatorResult integrate_spin_ode(const PulseProfile& profile, const CouplingVector& b,
                                    int steps) {
  if (steps < kMinSteps) throw StepCountTooSmall("integrator needs at least 16 steps");
  if (std::abs(profile.integral() - 1.0) > kProfileNormTol)
    throw NonNormalizedProfile("profile time integral must be 1 within 1e-9");

  const Operator2x2 gen = scaled_generator(b);
  const double t0 = profile.start();
  const double h = (profile.stop() - t0) / steps;

  Operator2x2 u = Operator2x2::identity();
  for (int k = 0; k < steps; ++k) {
    const double t = t0 + k * h;
    // The last step ends exactly on the support boundary; t + h can round
    // past it and would sample zero on a box edge.
    const double t_end = (k + 1 == steps) ? profile.stop() : t + h;
    // Classical RK4 on the matrix ODE U' = f(t) * gen * U.
    const Operator2x2 k1 = profile.value(t) * (gen * u);
    const Operator2x2 k2 = profile.value(t + 0.5 * h) * (gen * (u + (0.5 * h) * k1));
    const Operator2x2 k3 = profile.value(t + 0.5 * h) * (gen * (u + (0.5 * h) * k2));
    const Operator2x2 k4 = profile.value(t_end) * (gen * (u + h * k3));
    u = u + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }

  PropagatorResult result;
  result.propagator = u;
  result.unitarity_defect = unitarity_defect(u);
  result.steps = steps;
  return result;
}

Operator2x2 fixed_axis_exponential(const CouplingVector& b) {
  const double mag = b.magnitude();
  if (mag == 0.0) return Operator2x2::identity();
  const CouplingVector unit{b.bx / mag, b.by / mag, b.bz / mag};
  return std::cos(mag) * Operator2x2::identity() +
         complexd(0.0, -std::sin(mag)) * sigma_dot(unit);
}

double compare_with_delta(const CouplingVector& b, const PulseProfile& profile, int steps) {
  const PropagatorResult result = integrate_spin_ode(profile, b, steps);
  return max_abs_diff(result.propagator, delta_transfer(b));
}

std::vector<ConvergencePoint> convergence_study(const CouplingVector& b, ProfileKind profile_kind,
                                                const std::vector<double>& widths,
                                                int steps_per_width) {
  if (profile_kind == ProfileKind::sampled)
    throw Error("convergence study supports box and gaussian profiles");
  if (widths.empty()) throw Error("widths must be non-empty");
  for (std::size_t k = 0; k < widths.size(); ++k) {
    if (!(widths[k] > 0.0)) throw Error("widths must be strictly positive");
    if (k > 0 && !(widths[k] < widths[k - 1])) throw Error("widths must be strictly decreasing");
  }

  const Operator2x2 limit = fixed_axis_exponential(b);
  std::vector<ConvergencePoint> points;
  points.reserve(widths.size());
  for (const double width : widths) {
    const PulseProfile profile = profile_kind == ProfileKind::box ? PulseProfile::box(width)
                                                                  : PulseProfile::gaussian(width);
    const PropagatorResult result = integrate_spin_ode(profile, b, steps_per_width);
    points.push_back({width, result.unitarity_defect, max_abs_diff(result.propagator, limit)});
  }
  return points;
}

}  // namespace spinpulse
