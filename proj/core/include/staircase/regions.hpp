#pragma once

#include <cstdint>
#include <vector>

#include "staircase/real.hpp"

namespace staircase {

// Lattice counts for the two regions cut out between the dilated triangles
// T_{(a+3)/12, (a+3)/(12a)} and T_{1/2, 1/6} at dilation t, for 3 < a <= 4.
//
// With L1: 12x/(a+3) + 12ay/(a+3) = t and L2: 2x + 6y = t, which meet at
// (t/4, t/12):
//   upper (U): lattice points with x >= 0 on or below L2 and strictly above
//              L1, plus the meeting point when it is a lattice point;
//   lower (D): lattice points with y >= 0 on or between L2 and L1 below the
//              meeting point, closed on both lines;
//   boundary (d): lattice points of D on L2 other than the meeting point.
// These conventions make
//   L_{T_{(a+3)/12,(a+3)/(12a)}}(t) = L_{T_{1/2,1/6}}(t) + D - U - d
// hold for rational as well as irrational a.
struct SliceCounts {
  std::int64_t t = 0;
  Real a;
  Integer upper;
  Integer lower;
  Integer boundary;
};

// ceil(t/12) for even t, 0 for odd t.
Integer boundary_count(std::int64_t t);

// Throws DomainError unless 3 < a <= 4 and t >= 1; PrecisionError if an
// irrational a cannot be resolved within the precision ladder.
SliceCounts region_counts(const Real& a, std::int64_t t);

// One paired slice: row y0 of the upper region against row y1 = floor(t/6) - y0
// of the lower region.
struct SliceCheck {
  std::int64_t y0 = 0;
  std::int64_t y1 = 0;
  Interval x1;  // L1 at height y0
  Interval x2;  // L2 at height y0
  Interval x3;  // L2 at height y1
  Interval x4;  // L1 at height y1
  Integer upper_points;  // floor(x2) - ceil(max(0, x1)) + 1
  Integer lower_points;  // floor(x4) - ceil(x3) + 1
  bool passed = false;
  // x1 is an integer off the meeting row, which only happens for rational a
  // and falls outside the hypothesis of the slice argument.
  bool degenerate = false;
};

struct SliceReport {
  Real a;
  std::int64_t t = 0;
  std::vector<SliceCheck> slices;

  bool vacuous() const { return slices.empty(); }
  bool passed() const;
};

// Checks the per-slice inequality for every integer y0 in [t/12, t/6].
SliceReport verify_slice_inequality(const Real& a, std::int64_t t);

struct DiffViolation {
  std::int64_t t = 0;
  Integer expected;
  Integer actual;
};

struct DiffReport {
  std::int64_t t_max = 0;
  std::vector<DiffViolation> violations;

  bool passed() const { return violations.empty(); }
};

// L_{T_{1/2,1/6}}(t) - L_{T_{1/3,1/4}}(t) equals d, or d - 1 when t = 4 mod 12,
// for t = 1..t_max.
DiffReport verify_diff_identity(std::int64_t t_max);

}  // namespace staircase
