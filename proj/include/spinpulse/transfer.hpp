#pragma once

#include "spinpulse/spinor.hpp"

namespace spinpulse {

/// Dimensionless pulse coupling b = (mu*tau/hbar)*B. The bare-field formulas
/// (hbar = tau = mu = 1) and the restored-constant formulas are the same code
/// path: all pulse strength enters through this vector.
struct CouplingVector {
  double bx{};
  double by{};
  double bz{};

  double squared_magnitude() const { return bx * bx + by * by + bz * bz; }
  double magnitude() const { return std::sqrt(squared_magnitude()); }
};

/// The constant a in the step-times-delta association Theta*delta = a*delta.
/// Probability conservation across the pulse forces a = 1/2; other values are
/// representable so that uniqueness is testable.
struct AssociationConstant {
  double value{0.5};
};

/// sigma . b
Operator2x2 sigma_dot(const CouplingVector& b);

/// Junction-condition transfer matrix of an impulsive pulse:
///   U = [(1 - |b|^2/4) I - i sigma.b] / (1 + |b|^2/4).
/// An SU(2) rotation about b by angle 2*atan(|b|/2); reduces to the identity
/// as |b| -> 0.
Operator2x2 delta_transfer(const CouplingVector& b);

/// Junction map for a general association constant:
///   (I + i a sigma.b)^{-1} (I - i (1-a) sigma.b).
/// Norm-preserving only at a = 1/2, where it equals delta_transfer.
Operator2x2 general_a_transfer(AssociationConstant a, const CouplingVector& b);

/// Probability-density quotient across the pulse for association constant a
/// and field magnitude bmag. Identically 1 iff a = 1/2.
double norm_ratio(AssociationConstant a, double bmag);

/// |b|^2 / (1 + |b|^2/4)^2 for an initially z-polarized beam and an in-plane
/// field (bz = 0). Throws GeometryViolation if |bz| > 1e-12.
double spin_flip_probability(const CouplingVector& b);

/// Post-pulse (<sigma_x>, <sigma_y>, <sigma_z>) for chi_up initial state and
/// field along x (by = bz = 0), in units of hbar/2:
///   ( 0, -2b(1-b^2/4)/(1+b^2/4)^2, [(1-b^2/4)^2 - b^2]/(1+b^2/4)^2 ).
BlochVector post_pulse_expectations(const CouplingVector& b);

/// First-order (Larmor) approximation to the post-pulse <sigma_y>: -2*bx,
/// i.e. -omega_L*tau in units of hbar/2. Valid for |b| << 1.
double larmor_approx(const CouplingVector& b);

/// Rotation angle of delta_transfer(b): 2*atan(|b|/2), in [0, pi).
double rotation_angle(const CouplingVector& b);

}  // namespace spinpulse
