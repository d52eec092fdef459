#include "staircase/bullets.hpp"

namespace staircase {

bool BulletBound::contains(const QuadraticSurd& a) const {
  return QuadraticSurd(domain_lo) <= a && a <= QuadraticSurd(domain_hi);
}

Rational BulletBound::at(const Rational& a) const {
  return shape == Shape::constant ? coefficient : a / coefficient;
}

QuadraticSurd BulletBound::at(const QuadraticSurd& a) const {
  return shape == Shape::constant ? QuadraticSurd(coefficient) : a / QuadraticSurd(coefficient);
}

std::vector<BulletBound> bullet_bounds(const Rational& b) {
  if (b < Rational(1)) {
    throw DomainError("bullet bounds need b >= 1, got " + b.str());
  }
  using Shape = BulletBound::Shape;
  const Integer fb = b.floor();
  const Rational f1(Integer(fb + 1));
  const Rational f2(Integer(fb + 2));
  const std::int64_t k1 = Integer(fb + 1).get_si();
  const std::int64_t k2 = Integer(fb + 2).get_si();

  std::vector<BulletBound> out;
  out.push_back({1, Rational(1), b, Shape::constant, Rational(1), 1, b});
  out.push_back({2, b, f1, Shape::linear, b, k1, b});
  out.push_back({3, f1, f1 * f1 / b, Shape::constant, f1 / b, k1, f1 * f1 / b});
  out.push_back({4, f1 * f1 / b, f2, Shape::linear, f1, k2, f1 * f1 / b});
  out.push_back({5, f2, b * f2 * f2 / (f1 * f1), Shape::constant, f2 / f1, k2,
                 b * f2 * f2 / (f1 * f1)});
  if (b.is_integer()) {
    const Rational b1 = b + Rational(1);
    const Rational b3 = b + Rational(3);
    const std::int64_t k3 = b.numerator().get_si() + 3;
    out.push_back({6, b1 * b1 / b, b3, Shape::linear, b1, k3, b1 * b1 / b});
    out.push_back({7, b3, b * b3 * b3 / (b1 * b1), Shape::constant, b3 / b1, k3,
                   b * b3 * b3 / (b1 * b1)});
  }
  return out;
}

std::optional<Rational> bullet_lower_bound(const Rational& b, const Rational& a) {
  std::optional<Rational> best;
  for (const BulletBound& bullet : bullet_bounds(b)) {
    if (bullet.empty() || !bullet.contains(a)) {
      continue;
    }
    const Rational value = bullet.at(a);
    if (!best || *best < value) {
      best = value;
    }
  }
  return best;
}

std::vector<IntersectionPoint> intersection_points(const Rational& b) {
  std::vector<IntersectionPoint> out;
  for (const BulletBound& bullet : bullet_bounds(b)) {
    const Rational& point = bullet.touch_point;
    const Rational bound = bullet.at(point);
    out.push_back({bullet.index, point, bound * bound == point / b});
  }
  return out;
}

}  // namespace staircase
