#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "spinpulse/errors.hpp"

namespace spinpulse {

using complexd = std::complex<double>;

/// Two-component Pauli spinor (c_up, c_down).
struct Spinor {
  complexd up{};
  complexd down{};

  double norm2() const { return std::norm(up) + std::norm(down); }
  double norm() const { return std::sqrt(norm2()); }
};

inline Spinor chi_up() { return {1.0, 0.0}; }
inline Spinor chi_down() { return {0.0, 1.0}; }

inline Spinor operator+(const Spinor& a, const Spinor& b) {
  return {a.up + b.up, a.down + b.down};
}
inline Spinor operator-(const Spinor& a, const Spinor& b) {
  return {a.up - b.up, a.down - b.down};
}
inline Spinor operator*(complexd c, const Spinor& s) {
  return {c * s.up, c * s.down};
}

/// <a|b> with the physicists' convention (conjugate on the left).
inline complexd inner(const Spinor& a, const Spinor& b) {
  return std::conj(a.up) * b.up + std::conj(a.down) * b.down;
}

Spinor normalized(const Spinor& s);  // throws ZeroNorm

/// Complex 2x2 matrix, row-major.
struct Operator2x2 {
  std::array<complexd, 4> e{};

  complexd& operator()(int r, int c) { return e[2 * r + c]; }
  const complexd& operator()(int r, int c) const { return e[2 * r + c]; }

  static Operator2x2 identity() { return {{complexd{1.0}, {}, {}, complexd{1.0}}}; }
};

inline Operator2x2 operator+(const Operator2x2& a, const Operator2x2& b) {
  Operator2x2 r;
  for (int k = 0; k < 4; ++k) r.e[k] = a.e[k] + b.e[k];
  return r;
}
inline Operator2x2 operator-(const Operator2x2& a, const Operator2x2& b) {
  Operator2x2 r;
  for (int k = 0; k < 4; ++k) r.e[k] = a.e[k] - b.e[k];
  return r;
}
inline Operator2x2 operator*(complexd c, const Operator2x2& a) {
  Operator2x2 r;
  for (int k = 0; k < 4; ++k) r.e[k] = c * a.e[k];
  return r;
}
inline Operator2x2 operator*(const Operator2x2& a, const Operator2x2& b) {
  Operator2x2 r;
  r.e[0] = a.e[0] * b.e[0] + a.e[1] * b.e[2];
  r.e[1] = a.e[0] * b.e[1] + a.e[1] * b.e[3];
  r.e[2] = a.e[2] * b.e[0] + a.e[3] * b.e[2];
  r.e[3] = a.e[2] * b.e[1] + a.e[3] * b.e[3];
  return r;
}

inline Operator2x2 adjoint(const Operator2x2& a) {
  return {{std::conj(a.e[0]), std::conj(a.e[2]), std::conj(a.e[1]), std::conj(a.e[3])}};
}

inline complexd det(const Operator2x2& a) { return a.e[0] * a.e[3] - a.e[1] * a.e[2]; }

inline complexd trace(const Operator2x2& a) { return a.e[0] + a.e[3]; }

inline double max_abs(const Operator2x2& a) {
  double m = 0.0;
  for (const auto& v : a.e) m = std::max(m, std::abs(v));
  return m;
}

inline double max_abs_diff(const Operator2x2& a, const Operator2x2& b) {
  return max_abs(a - b);
}

/// Max-entry deviation of op†·op from the identity.
inline double unitarity_defect(const Operator2x2& op) {
  return max_abs_diff(adjoint(op) * op, Operator2x2::identity());
}

/// Expectation-value triple (<sigma_x>, <sigma_y>, <sigma_z>); spin values in
/// units of hbar/2. Unit length for pure states.
struct BlochVector {
  double x{};
  double y{};
  double z{};

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

enum class Axis { x, y, z };

Operator2x2 pauli_matrix(Axis axis);

inline Spinor apply(const Operator2x2& op, const Spinor& s) {
  return {op.e[0] * s.up + op.e[1] * s.down, op.e[2] * s.up + op.e[3] * s.down};
}

BlochVector bloch_vector(const Spinor& s);  // throws NotNormalized

bool is_unitary(const Operator2x2& op, double tol);

/// exp(-i*angle*(axis.sigma)) = cos(angle)*I - i*sin(angle)*(axis.sigma).
/// The axis must be a unit vector.
Operator2x2 axis_angle_rotation(const std::array<double, 3>& axis, double angle);

/// <sigma_axis> in units of hbar/2.
double expectation_spin(const Spinor& s, Axis axis);  // throws NotNormalized

}  // namespace spinpulse
