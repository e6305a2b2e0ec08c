#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "spinpulse/oracle.hpp"
#include "spinpulse/pulse_profile.hpp"

using namespace spinpulse;

namespace {

double simpson_integral(const PulseProfile& p, int intervals) {
  const double a = p.start(), b = p.stop();
  const double h = (b - a) / intervals;
  double acc = p.value(a) + p.value(b);
  for (int k = 1; k < intervals; ++k) acc += (k % 2 == 1 ? 4.0 : 2.0) * p.value(a + k * h);
  return acc * h / 3.0;
}

PulseProfile triangle() {
  return PulseProfile::sampled({{-1.0, 0.0}, {0.0, 1.0}, {1.0, 0.0}});
}

}  // namespace

TEST_CASE("box profile") {
  const PulseProfile p = PulseProfile::box(0.5);
  CHECK(p.kind() == ProfileKind::box);
  CHECK(p.start() == doctest::Approx(-0.25));
  CHECK(p.stop() == doctest::Approx(0.25));
  CHECK(p.value(0.0) == doctest::Approx(2.0));
  CHECK(p.value(0.3) == 0.0);
  CHECK(p.value(-0.3) == 0.0);
  CHECK(p.integral() == 1.0);
  CHECK(simpson_integral(p, 1 << 14) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(PulseProfile::box(0.0), Error);
  CHECK_THROWS_AS(PulseProfile::box(-1.0), Error);
}

TEST_CASE("gaussian profile is truncated, renormalized, and unit-mass") {
  const PulseProfile p = PulseProfile::gaussian(0.7);
  CHECK(p.start() == doctest::Approx(-4.2));
  CHECK(p.stop() == doctest::Approx(4.2));
  CHECK(p.value(5.0) == 0.0);
  CHECK(p.value(0.3) == doctest::Approx(p.value(-0.3)));
  CHECK(p.value(0.0) > p.value(0.5));
  CHECK(p.integral() == 1.0);
  // The renormalization constant must make the truncated mass exactly 1.
  CHECK(simpson_integral(p, 1 << 15) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS(PulseProfile::gaussian(0.0), Error);
}

TEST_CASE("sampled profile interpolates linearly") {
  const PulseProfile p = triangle();
  CHECK(p.kind() == ProfileKind::sampled);
  CHECK(p.integral() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p.value(0.0) == doctest::Approx(1.0));
  CHECK(p.value(0.5) == doctest::Approx(0.5));
  CHECK(p.value(-0.5) == doctest::Approx(0.5));
  CHECK(p.value(2.0) == 0.0);
  CHECK(p.value(-2.0) == 0.0);

  CHECK_THROWS_AS(PulseProfile::sampled({{0.0, 1.0}}), Error);
  CHECK_THROWS_AS(PulseProfile::sampled({{0.0, 1.0}, {0.0, 2.0}}), Error);
  CHECK_THROWS_AS(PulseProfile::sampled({{1.0, 1.0}, {0.0, 2.0}}), Error);
}

TEST_CASE("integrator rejects bad inputs") {
  const CouplingVector b{0.3, 0.0, 0.0};
  CHECK_THROWS_AS(integrate_spin_ode(PulseProfile::box(1.0), b, 15), StepCountTooSmall);
  CHECK_NOTHROW(integrate_spin_ode(PulseProfile::box(1.0), b, 16));
  const PulseProfile half = PulseProfile::sampled({{0.0, 0.0}, {1.0, 1.0}});
  CHECK_THROWS_AS(integrate_spin_ode(half, b, 64), NonNormalizedProfile);
}

TEST_CASE("zero coupling integrates to the identity") {
  for (const PulseProfile& p :
       {PulseProfile::box(1.0), PulseProfile::gaussian(1.0), triangle()}) {
    const PropagatorResult r = integrate_spin_ode(p, {}, 64);
    CHECK(max_abs_diff(r.propagator, Operator2x2::identity()) <= 1e-14);
    CHECK(r.unitarity_defect <= 1e-14);
    CHECK(r.steps == 64);
  }
}

TEST_CASE("box pulse at b = 0.3 matches the fixed-axis exponential") {
  const CouplingVector b{0.3, 0.0, 0.0};
  const PropagatorResult r = integrate_spin_ode(PulseProfile::box(1.0), b, 4096);
  const Operator2x2 expected = fixed_axis_exponential(b);
  CHECK(max_abs_diff(r.propagator, expected) <= 1e-10);
  CHECK(expected.e[0].real() == doctest::Approx(0.9553364891256060).epsilon(1e-14));
  CHECK(expected.e[1].imag() == doctest::Approx(-0.2955202066613396).epsilon(1e-14));
  CHECK(r.unitarity_defect <= 1e-10);
}

TEST_CASE("gaussian pulse at b = 1 matches the fixed-axis exponential") {
  const CouplingVector b{1.0, 0.0, 0.0};
  const PropagatorResult r = integrate_spin_ode(PulseProfile::gaussian(1.0), b, 8192);
  CHECK(max_abs_diff(r.propagator, fixed_axis_exponential(b)) <= 1e-9);
}

TEST_CASE("profile shape is irrelevant for a fixed field direction") {
  const CouplingVector b{0.5, 0.2, 0.0};
  const Operator2x2 expected = fixed_axis_exponential(b);
  for (const PulseProfile& p :
       {PulseProfile::box(0.3), PulseProfile::gaussian(0.8), triangle()}) {
    const PropagatorResult r = integrate_spin_ode(p, b, 8192);
    CHECK(max_abs_diff(r.propagator, expected) <= 1e-9);
  }
}

TEST_CASE("unitarity defect stays below 1e-9 at 4096 steps up to |b| = 3") {
  for (const CouplingVector& b : {CouplingVector{3.0, 0.0, 0.0}, CouplingVector{0.0, 3.0, 0.0},
                                  CouplingVector{std::sqrt(3.0), std::sqrt(3.0), std::sqrt(3.0)},
                                  CouplingVector{-1.0, 2.0, -2.0}}) {
    for (const PulseProfile& p : {PulseProfile::box(1.0), PulseProfile::gaussian(1.0)}) {
      const PropagatorResult r = integrate_spin_ode(p, b, 4096);
      CHECK(r.unitarity_defect <= 1e-9);
      CHECK(max_abs_diff(r.propagator, fixed_axis_exponential(b)) <= 1e-9);
    }
  }
}

TEST_CASE("fixed-axis exponential special cases") {
  CHECK(max_abs_diff(fixed_axis_exponential({}), Operator2x2::identity()) == 0.0);
  const CouplingVector b{0.0, 0.0, 2.0};
  const Operator2x2 u = fixed_axis_exponential(b);
  CHECK(u.e[0].real() == doctest::Approx(std::cos(2.0)));
  CHECK(u.e[0].imag() == doctest::Approx(-std::sin(2.0)));
  CHECK(std::abs(u.e[1]) == 0.0);
  const double mag = 1.7;
  const CouplingVector tilted{mag / std::sqrt(2.0), 0.0, mag / std::sqrt(2.0)};
  CHECK(max_abs_diff(fixed_axis_exponential(tilted),
                     axis_angle_rotation({1.0 / std::sqrt(2.0), 0.0, 1.0 / std::sqrt(2.0)}, mag)) <=
        1e-15);
}

TEST_CASE("gap to the impulsive transfer matrix") {
  const PulseProfile box = PulseProfile::box(1.0);
  CHECK(compare_with_delta({}, box, 64) <= 1e-14);
  CHECK(compare_with_delta({0.3, 0.0, 0.0}, box, 4096) ==
        doctest::Approx(2.1216736540046118e-3).epsilon(1e-8));
  CHECK(compare_with_delta({2.0, 0.0, 0.0}, box, 4096) ==
        doctest::Approx(0.41614683654714239).epsilon(1e-8));
}

TEST_CASE("angle gap grows as the cube of the coupling") {
  const std::vector<double> bs = {0.05, 0.1, 0.2, 0.4};
  const std::vector<double> expected_gaps = {1.0412762159681e-5, 8.32085561144772e-5,
                                             6.62695017675945e-4, 5.2088803002384833e-3};
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < bs.size(); ++k) {
    const double gap = bs[k] - 2.0 * std::atan(0.5 * bs[k]);
    CHECK(gap == doctest::Approx(expected_gaps[k]).epsilon(1e-10));
    // Leading terms: b^3/12 - b^5/80.
    const double b = bs[k];
    CHECK(std::abs(gap - b * b * b / 12.0) <= 1.01 * std::pow(b, 5) / 80.0);
    const double lx = std::log(b), ly = std::log(gap);
    sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
  }
  const double n = static_cast<double>(bs.size());
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  CHECK(slope == doctest::Approx(2.98929712505).epsilon(1e-9));
  CHECK(slope > 2.9);
  CHECK(slope < 3.1);
}

TEST_CASE("convergence study validates its width sequence") {
  const CouplingVector b{0.3, 0.0, 0.0};
  CHECK_THROWS_AS(convergence_study(b, ProfileKind::sampled, {1.0, 0.1}, 64), Error);
  CHECK_THROWS_AS(convergence_study(b, ProfileKind::box, {}, 64), Error);
  CHECK_THROWS_AS(convergence_study(b, ProfileKind::box, {0.1, 1.0}, 64), Error);
  CHECK_THROWS_AS(convergence_study(b, ProfileKind::box, {1.0, 0.0}, 64), Error);
  CHECK_THROWS_AS(convergence_study(b, ProfileKind::box, {1.0, 1.0}, 64), Error);
}

TEST_CASE("propagators are width-independent for a fixed direction") {
  const auto points =
      convergence_study({0.3, 0.0, 0.0}, ProfileKind::box, {1.0, 0.1, 0.01}, 4096);
  REQUIRE(points.size() == 3);
  for (const auto& p : points) {
    CHECK(p.gap_to_exponential <= 1e-9);
    CHECK(p.defect <= 1e-9);
  }
  CHECK(points[0].width == 1.0);
  CHECK(points[2].width == 0.01);

  const auto zero = convergence_study({}, ProfileKind::box, {1.0, 0.1}, 64);
  for (const auto& p : zero) CHECK(p.gap_to_exponential <= 1e-14);

  const auto tilted =
      convergence_study({0.3, 0.4, 0.0}, ProfileKind::gaussian, {1.0, 0.1}, 4096);
  for (const auto& p : tilted) CHECK(p.gap_to_exponential <= 1e-9);
}
