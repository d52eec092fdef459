#include "staircase/ech.hpp"

namespace staircase {

CapacitySequence::CapacitySequence(const Ellipsoid& ellipsoid)
    : ellipsoid_(ellipsoid),
      scale_(lcm(ellipsoid.a().denominator(), ellipsoid.b().denominator())),
      step_a_(ellipsoid.a().numerator() * (scale_ / ellipsoid.a().denominator())),
      step_b_(ellipsoid.b().numerator() * (scale_ / ellipsoid.b().denominator())) {
  frontier_.push(Node{Integer(0), Integer(0), Integer(0)});
}

void CapacitySequence::extend_to(std::size_t count) {
  values_.reserve(count);
  while (values_.size() < count) {
    Node top = frontier_.top();
    frontier_.pop();
    // (m, n) with m > 0 is reached only from (m-1, n); (0, n) only from
    // (0, n-1). Every lattice point is visited exactly once.
    frontier_.push(Node{top.value + step_a_, top.m + 1, top.n});
    if (top.m == 0) {
      frontier_.push(Node{top.value + step_b_, top.m, top.n + 1});
    }
    values_.emplace_back(top.value, scale_);
  }
}

const Rational& CapacitySequence::at(std::size_t k) {
  extend_to(k + 1);
  return values_[k];
}

std::span<const Rational> CapacitySequence::prefix(std::size_t n) {
  extend_to(n);
  return {values_.data(), n};
}

Rational capacity(const Ellipsoid& ellipsoid, std::size_t k) {
  CapacitySequence sequence(ellipsoid);
  return sequence.at(k);
}

std::vector<Rational> capacity_prefix(const Ellipsoid& ellipsoid, std::size_t n) {
  CapacitySequence sequence(ellipsoid);
  const auto values = sequence.prefix(n);
  return {values.begin(), values.end()};
}

Rational capacity_lower_bound(const Rational& a, CapacitySequence& target, std::size_t n) {
  if (a < Rational(1)) {
    throw DomainError("capacity lower bound needs a >= 1, got " + a.str());
  }
  if (n == 0) {
    throw DomainError("capacity lower bound needs at least one capacity");
  }
  CapacitySequence source(Ellipsoid(Rational(1), a));
  const auto lhs = source.prefix(n + 1);
  const auto rhs = target.prefix(n + 1);
  Rational best;
  for (std::size_t k = 1; k <= n; ++k) {
    const Rational ratio = lhs[k] / rhs[k];
    if (best < ratio) {
      best = ratio;
    }
  }
  return best;
}

Rational capacity_lower_bound(const Rational& a, const Rational& b, std::size_t n) {
  if (b < Rational(1)) {
    throw DomainError("capacity lower bound needs b >= 1, got " + b.str());
  }
  CapacitySequence target(Ellipsoid(Rational(1), b));
  return capacity_lower_bound(a, target, n);
}

}  // namespace staircase
