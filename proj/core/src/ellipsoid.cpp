#include "staircase/ellipsoid.hpp"

#include <numeric>
#include <string>

namespace staircase {

Ellipsoid::Ellipsoid(const Rational& a, const Rational& b) : a_(a), b_(b) {
  if (a_.sign() <= 0 || b_.sign() <= 0) {
    throw DomainError("ellipsoid parameters must be positive, got E(" + a.str() + ", " + b.str() +
                      ")");
  }
  if (b_ < a_) {
    std::swap(a_, b_);
  }
}

Ellipsoid Ellipsoid::scaled(const Rational& factor) const {
  return Ellipsoid(a_ * factor, b_ * factor);
}

std::vector<Rational> triangle_weights(const Rational& u, const Rational& v) {
  if (u.sign() <= 0 || v.sign() <= 0) {
    throw DomainError("triangle legs must be positive");
  }
  std::vector<Rational> weights;
  Rational small = min(u, v);
  Rational big = max(u, v);
  while (!small.is_zero()) {
    const Integer count = (big / small).floor();
    for (Integer i = 0; i < count; ++i) {
      weights.push_back(small);
    }
    const Rational rest = big - Rational(count) * small;
    big = small;
    small = rest;
  }
  return weights;
}

std::vector<Rational> weight_sequence(const Rational& p_over_q) {
  if (p_over_q < Rational(1)) {
    throw DomainError("weight sequence needs p/q >= 1, got " + p_over_q.str());
  }
  return triangle_weights(Rational(1), p_over_q);
}

WeightExpansion negative_weight_sequence(const Rational& p_over_q) {
  if (p_over_q < Rational(1)) {
    throw DomainError("negative weight sequence needs p/q >= 1, got " + p_over_q.str());
  }
  WeightExpansion out{p_over_q, {}};
  if (p_over_q == Rational(1)) {
    return out;
  }
  out.tail = triangle_weights(p_over_q - Rational(1), p_over_q);
  return out;
}

PerVol per_vol(const WeightExpansion& expansion) {
  Rational sum;
  Rational sum_sq;
  for (const Rational& w : expansion.tail) {
    sum += w;
    sum_sq += w * w;
  }
  const Rational& w = expansion.head;
  return {Rational(3) * w - sum, w * w - sum_sq};
}

AccumulationData accumulation_point(std::int64_t k, std::int64_t l) {
  if (l < 1 || k < l) {
    throw DomainError("accumulation point needs k >= l >= 1, got (" + std::to_string(k) + ", " +
                      std::to_string(l) + ")");
  }
  if (std::gcd(k, l) != 1) {
    throw DomainError("accumulation point needs coprime (k, l), got (" + std::to_string(k) +
                      ", " + std::to_string(l) + ")");
  }
  const PerVol pv = per_vol(negative_weight_sequence(Rational(Integer(k), Integer(l))));
  // a^2 - c a + 1 = 0 with c = per^2/vol - 2; the larger root is >= 1
  // because the product of the roots is 1.
  const Rational c = pv.per * pv.per / pv.vol - Rational(2);
  const Rational discriminant = c * c - Rational(4);
  if (discriminant.sign() < 0) {
    throw DomainError("accumulation equation has no real root");
  }
  QuadraticSurd a0 = (QuadraticSurd(c) + QuadraticSurd::sqrt(discriminant)) / QuadraticSurd(2);
  return {k, l, pv.per, pv.vol, std::move(a0)};
}

}  // namespace staircase
