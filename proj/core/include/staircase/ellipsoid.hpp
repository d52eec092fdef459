#pragma once

#include <cstdint>
#include <vector>

#include "staircase/quadratic_surd.hpp"
#include "staircase/rational.hpp"

namespace staircase {

// The four-dimensional ellipsoid E(a, b), stored with 0 < a <= b.
class Ellipsoid {
 public:
  // Throws DomainError unless both parameters are positive. The pair is
  // reordered so that a() <= b().
  Ellipsoid(const Rational& a, const Rational& b);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  Ellipsoid scaled(const Rational& factor) const;

  friend bool operator==(const Ellipsoid&, const Ellipsoid&) = default;

 private:
  Rational a_;
  Rational b_;
};

// Negative weight sequence (w; w_1, ..., w_k) of a rational ellipsoid.
struct WeightExpansion {
  Rational head;
  std::vector<Rational> tail;  // non-increasing
};

struct PerVol {
  Rational per;
  Rational vol;
};

struct AccumulationData {
  std::int64_t k = 1;
  std::int64_t l = 1;
  Rational per;
  Rational vol;
  QuadraticSurd a0;
};

// Weight sequence of the right triangle with legs u and v on the axes:
// repeatedly cut off the largest isosceles right triangle and recurse on the
// remainder. This is the Euclidean algorithm on (u, v), each quotient giving
// the multiplicity of the current weight.
std::vector<Rational> triangle_weights(const Rational& u, const Rational& v);

// Weight sequence of the triangle with legs 1 and p/q. Requires p/q >= 1.
std::vector<Rational> weight_sequence(const Rational& p_over_q);

// Head p/q plus the weights of the complement triangle with legs
// (p/q - 1, p/q). Requires p/q >= 1; p/q = 1 gives (1; empty).
WeightExpansion negative_weight_sequence(const Rational& p_over_q);

// (3w - sum w_i, w^2 - sum w_i^2)
PerVol per_vol(const WeightExpansion& expansion);

// Root a0 >= 1 of a^2 - (per^2/vol - 2) a + 1 = 0 for b = k/l, with per and
// vol taken from the negative weight sequence of E(1, k/l). Requires
// gcd(k, l) = 1 and k >= l >= 1.
AccumulationData accumulation_point(std::int64_t k, std::int64_t l);

}  // namespace staircase
