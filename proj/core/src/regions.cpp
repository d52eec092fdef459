#include "staircase/regions.hpp"

#include <algorithm>

#include "staircase/ehrhart.hpp"

namespace staircase {

namespace {

void check_domain(const Real& a, std::int64_t t) {
  if (t < 1) {
    throw DomainError("dilation t must be positive");
  }
  if (a.compare(Rational(3)) <= 0 || a.compare(Rational(4)) > 0) {
    throw DomainError("region counts need 3 < a <= 4, got " + a.str());
  }
}

Rational q(std::int64_t n) { return Rational(n); }

// x on L1 at height y is t/4 + a (t - 12 y)/12.
Rational l1_offset(std::int64_t t) { return Rational(t) / Rational(4); }
Rational l1_slope(std::int64_t t, std::int64_t y) { return Rational(t - 12 * y) / Rational(12); }
// x on L2 at height y.
Rational l2_x(std::int64_t t, std::int64_t y) { return Rational(t - 6 * y) / Rational(2); }

}  // namespace

Integer boundary_count(std::int64_t t) {
  if (t % 2 != 0) {
    return Integer(0);
  }
  return (Rational(t) / Rational(12)).ceil();
}

SliceCounts region_counts(const Real& a, std::int64_t t) {
  check_domain(a, t);
  AffineRounder rounder(a);
  const std::int64_t twelfth = t / 12;  // floor(t/12)
  const std::int64_t sixth = t / 6;     // floor(t/6)

  Integer upper = t % 12 == 0 ? 1 : 0;
  for (std::int64_t y = twelfth + 1; y <= sixth; ++y) {
    const Integer x1_floor = rounder.floor(l1_offset(t), l1_slope(t, y));
    const Integer x2_floor = l2_x(t, y).floor();
    // integers x with max(x1, -1) < x <= x2
    upper += x2_floor - std::max(x1_floor, Integer(-1));
  }

  Integer lower = 0;
  for (std::int64_t y = 0; y <= twelfth; ++y) {
    const Integer x4_floor = rounder.floor(l1_offset(t), l1_slope(t, y));
    const Integer x3_ceil = l2_x(t, y).ceil();
    lower += x4_floor - x3_ceil + 1;
  }
  return {t, a, upper, lower, boundary_count(t)};
}

bool SliceReport::passed() const {
  return std::all_of(slices.begin(), slices.end(), [](const SliceCheck& s) { return s.passed; });
}

SliceReport verify_slice_inequality(const Real& a, std::int64_t t) {
  check_domain(a, t);
  AffineRounder rounder(a);
  SliceReport report{a, t, {}};
  const std::int64_t first = (t + 11) / 12;  // ceil(t/12)
  const std::int64_t sixth = t / 6;
  for (std::int64_t y0 = first; y0 <= sixth; ++y0) {
    SliceCheck s;
    s.y0 = y0;
    s.y1 = sixth - y0;
    const Rational slope0 = l1_slope(t, s.y0);
    const Rational slope1 = l1_slope(t, s.y1);
    const Rational x2 = l2_x(t, s.y0);
    const Rational x3 = l2_x(t, s.y1);

    const Integer x1_ceil = rounder.ceil(l1_offset(t), slope0);
    s.upper_points = x2.floor() - std::max(x1_ceil, Integer(0)) + 1;
    s.lower_points = rounder.floor(l1_offset(t), slope1) - x3.ceil() + 1;
    s.passed = s.upper_points <= s.lower_points;
    s.degenerate = !slope0.is_zero() && rounder.is_integer(l1_offset(t), slope0);

    s.x1 = rounder.enclose(l1_offset(t), slope0);
    s.x2 = {x2, x2};
    s.x3 = {x3, x3};
    s.x4 = rounder.enclose(l1_offset(t), slope1);
    report.slices.push_back(std::move(s));
  }
  return report;
}

DiffReport verify_diff_identity(std::int64_t t_max) {
  if (t_max < 1) {
    throw DomainError("t_max must be positive");
  }
  const RightTriangle half_sixth(Rational(1) / q(2), Rational(1) / q(6));
  const RightTriangle third_quarter(Rational(1) / q(3), Rational(1) / q(4));
  DiffReport report{t_max, {}};
  for (std::int64_t t = 1; t <= t_max; ++t) {
    const Integer actual = triangle_count(half_sixth, t) - triangle_count(third_quarter, t);
    Integer expected = boundary_count(t);
    if (t % 12 == 4) {
      expected -= 1;
    }
    if (actual != expected) {
      report.violations.push_back({t, expected, actual});
    }
  }
  return report;
}

}  // namespace staircase
