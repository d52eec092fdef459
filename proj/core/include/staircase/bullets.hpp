#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "staircase/quadratic_surd.hpp"
#include "staircase/rational.hpp"

namespace staircase {

// One piece of the ECH lower bound for c_b(a): on [domain_lo, domain_hi]
// the bound is either a constant or a linear function a / coefficient.
struct BulletBound {
  enum class Shape { constant, linear };

  int index = 0;  // 1..7
  Rational domain_lo;
  Rational domain_hi;
  Shape shape = Shape::constant;
  Rational coefficient;
  // Capacity index k whose ratio c_k(E(1,a)) / c_k(E(1,b)) realizes the
  // bound on the whole domain.
  std::int64_t witness_k = 1;
  // The point a_i where the bound meets the volume curve sqrt(a/b).
  Rational touch_point;

  // Inverted domains are possible for some b; such bullets say nothing.
  bool empty() const { return domain_hi < domain_lo; }
  bool contains(const Rational& a) const { return domain_lo <= a && a <= domain_hi; }
  bool contains(const QuadraticSurd& a) const;
  Rational at(const Rational& a) const;
  QuadraticSurd at(const QuadraticSurd& a) const;
};

// The five bullets valid for every b >= 1, plus the two extra bullets when b
// is an integer. Throws DomainError for b < 1.
std::vector<BulletBound> bullet_bounds(const Rational& b);

// Largest bullet bound whose domain contains a, or nullopt if none does.
std::optional<Rational> bullet_lower_bound(const Rational& b, const Rational& a);

struct IntersectionPoint {
  int index = 0;
  Rational value;
  // bound(a_i)^2 == a_i / b, exactly.
  bool identity_holds = false;
};

// a_1..a_5, and a_6, a_7 for integral b.
std::vector<IntersectionPoint> intersection_points(const Rational& b);

}  // namespace staircase
