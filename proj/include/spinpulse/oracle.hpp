#pragma once

#include <vector>

#include "spinpulse/pulse_profile.hpp"
#include "spinpulse/transfer.hpp"

namespace spinpulse {

/// Time-ordered propagator over a pulse profile, with the unitarity defect of
/// the raw integrator output. The defect is reported, never silently repaired.
struct PropagatorResult {
  Operator2x2 propagator;
  double unitarity_defect = 0.0;
  int steps = 0;
};

/// Integrates dU/dt = -i f(t) (sigma . b) U over the profile's support with a
/// fixed-step 4th-order Runge-Kutta scheme, starting from the identity.
/// For a fixed field direction the exact result is
/// cos(|b|) I - i sin(|b|) (b_hat . sigma).
/// No unitary projection is applied; the defect field carries the deviation.
/// Throws StepCountTooSmall if steps < 16, NonNormalizedProfile if the
/// profile's time integral deviates from 1 by more than 1e-9.
PropagatorResult integrate_spin_ode(const PulseProfile& profile, const CouplingVector& b,
                                    int steps);

/// Exact finite-width limit for a fixed field direction:
/// exp(-i sigma . b) = cos(|b|) I - i sin(|b|) (b_hat . sigma).
/// Identity for b = 0.
Operator2x2 fixed_axis_exponential(const CouplingVector& b);

/// Max-entry distance between the integrated finite-width propagator and the
/// impulsive-limit transfer matrix delta_transfer(b). Grows like |b|^3/12 for
/// small |b| and does not vanish for large |b|: the smooth regularization and
/// the impulsive limit are different idealizations.
double compare_with_delta(const CouplingVector& b, const PulseProfile& profile, int steps);

struct ConvergencePoint {
  double width = 0.0;
  double defect = 0.0;
  double gap_to_exponential = 0.0;
};

/// Integrates the pulse at each width and measures the unitarity defect and
/// the max-entry gap to fixed_axis_exponential(b). For a fixed field
/// direction the gap is integrator-error-limited and width-independent.
/// Widths must be strictly positive and strictly decreasing; profile_kind
/// must be box or gaussian.
std::vector<ConvergencePoint> convergence_study(const CouplingVector& b, ProfileKind profile_kind,
                                                const std::vector<double>& widths,
                                                int steps_per_width);

}  // namespace spinpulse
