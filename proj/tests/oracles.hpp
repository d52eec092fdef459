#pragma once

// Slow, obviously-correct reference implementations used by the tests.

#include <cstdint>
#include <vector>

#include "staircase/quadratic_surd.hpp"
#include "staircase/rational.hpp"

namespace oracle {

using staircase::Integer;
using staircase::QuadraticSurd;
using staircase::Rational;

inline Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n) / Rational(d); }

// First `count` elements of the sorted multiset {m a + n b}.
std::vector<Rational> sum_set(const Rational& a, const Rational& b, std::size_t count);

// Points (x, y) in Z^2 with x, y >= 0 and x/u + y/v <= t, by scanning the box.
Integer lattice_points(const Rational& u, const Rational& v, std::int64_t t);

// (s^2 + D + 2 s sqrt(D)) / (4 k l) with s = k + l + 1, D = s^2 - 4kl.
QuadraticSurd accumulation_closed_form(std::int64_t k, std::int64_t l);

// Region counts for rational a in (3, 4], straight from the point-set
// definitions: scans every lattice point of the bounding box. The meeting
// point (t/4, t/12), when integral, counts in both regions.
struct Regions {
  Integer upper;
  Integer lower;
  Integer boundary;
};
Regions regions(const Rational& a, std::int64_t t);

}  // namespace oracle
