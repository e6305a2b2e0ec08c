#include "spinpulse/spinor.hpp"

namespace spinpulse {

namespace {
constexpr double kStateTol = 1e-9;

bool is_state(const Spinor& s) { return std::abs(s.norm() - 1.0) <= kStateTol; }
}  // namespace

Spinor normalized(const Spinor& s) {
  const double n = s.norm();
  if (n == 0.0 || !std::isfinite(n)) throw ZeroNorm("cannot normalize spinor with zero or non-finite norm");
  return (1.0 / n) * s;
}

Operator2x2 pauli_matrix(Axis axis) {
  const complexd i{0.0, 1.0};
  switch (axis) {
    case Axis::x:
      return {{0.0, 1.0, 1.0, 0.0}};
    case Axis::y:
      return {{0.0, -i, i, 0.0}};
    case Axis::z:
      return {{1.0, 0.0, 0.0, -1.0}};
  }
  throw Error("invalid Pauli axis");
}

BlochVector bloch_vector(const Spinor& s) {
  if (!is_state(s)) throw NotNormalized("bloch_vector requires a normalized spinor");
  // <sigma_j> written out; avoids three matrix applications.
  const complexd cross = std::conj(s.up) * s.down;
  return {2.0 * cross.real(), 2.0 * cross.imag(), std::norm(s.up) - std::norm(s.down)};
}

bool is_unitary(const Operator2x2& op, double tol) {
  return unitarity_defect(op) <= tol;
}

Operator2x2 axis_angle_rotation(const std::array<double, 3>& axis, double angle) {
  const double n2 = axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2];
  if (std::abs(std::sqrt(n2) - 1.0) > 1e-9) throw BadAxis("rotation axis must be a unit vector");
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const complexd i{0.0, 1.0};
  Operator2x2 r = Operator2x2::identity();
  r.e[0] = c - i * s * axis[2];
  r.e[1] = -i * s * complexd{axis[0], -axis[1]};
  r.e[2] = -i * s * complexd{axis[0], axis[1]};
  r.e[3] = c + i * s * axis[2];
  return r;
}

double expectation_spin(const Spinor& s, Axis axis) {
  if (!is_state(s)) throw NotNormalized("expectation_spin requires a normalized spinor");
  const BlochVector v = bloch_vector(s);
  switch (axis) {
    case Axis::x: return v.x;
    case Axis::y: return v.y;
    case Axis::z: return v.z;
  }
  throw Error("invalid Pauli axis");
}

}  // namespace spinpulse
