#include "spinpulse/transfer.hpp"

namespace spinpulse {

namespace {
constexpr double kGeometryTol = 1e-12;
const complexd kI{0.0, 1.0};
}  // namespace

Operator2x2 sigma_dot(const CouplingVector& b) {
  Operator2x2 m;
  m.e[0] = b.bz;
  m.e[1] = complexd{b.bx, -b.by};
  m.e[2] = complexd{b.bx, b.by};
  m.e[3] = -b.bz;
  return m;
}

Operator2x2 delta_transfer(const CouplingVector& b) {
  const double b2 = b.squared_magnitude();
  const double denom = 1.0 + 0.25 * b2;
  const Operator2x2 numer =
      complexd{1.0 - 0.25 * b2} * Operator2x2::identity() - kI * sigma_dot(b);
  return complexd{1.0 / denom} * numer;
}

Operator2x2 general_a_transfer(AssociationConstant a, const CouplingVector& b) {
  const double b2 = b.squared_magnitude();
  const Operator2x2 sb = sigma_dot(b);
  // (I + i a sigma.b)^{-1} = (I - i a sigma.b) / (1 + a^2 |b|^2), using
  // (sigma.b)^2 = |b|^2. Closed form, no generic inversion.
  const Operator2x2 inv_left =
      complexd{1.0 / (1.0 + a.value * a.value * b2)} *
      (Operator2x2::identity() - kI * complexd{a.value} * sb);
  const Operator2x2 right = Operator2x2::identity() - kI * complexd{1.0 - a.value} * sb;
  return inv_left * right;
}

double norm_ratio(AssociationConstant a, double bmag) {
  const double a_ = a.value;
  const double b2 = bmag * bmag;
  const double q = a_ * (1.0 - a_);
  const double numer = 1.0 + (1.0 - 2.0 * q) * b2 + q * q * b2 * b2;
  const double denom = 1.0 + a_ * a_ * b2;
  return numer / (denom * denom);
}

double spin_flip_probability(const CouplingVector& b) {
  if (std::abs(b.bz) > kGeometryTol)
    throw GeometryViolation("spin_flip_probability requires the field in the xy-plane (bz = 0)");
  const double b2 = b.squared_magnitude();
  const double denom = 1.0 + 0.25 * b2;
  return b2 / (denom * denom);
}

BlochVector post_pulse_expectations(const CouplingVector& b) {
  if (std::abs(b.by) > kGeometryTol || std::abs(b.bz) > kGeometryTol)
    throw GeometryViolation("post_pulse_expectations requires the field along x (by = bz = 0)");
  const double bx = b.bx;
  const double a = 1.0 - 0.25 * bx * bx;
  const double denom = 1.0 + 0.25 * bx * bx;
  const double d2 = denom * denom;
  return {0.0, -2.0 * bx * a / d2, (a * a - bx * bx) / d2};
}

double larmor_approx(const CouplingVector& b) { return -2.0 * b.bx; }

double rotation_angle(const CouplingVector& b) {
  return 2.0 * std::atan(0.5 * b.magnitude());
}

}  // namespace spinpulse
