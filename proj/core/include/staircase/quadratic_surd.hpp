#pragma once

#include <iosfwd>
#include <string>

#include "staircase/rational.hpp"

namespace staircase {

// Exact element x + y*sqrt(d) of a real quadratic field. The radicand d is
// kept squarefree; a rational value is stored with y = 0 and d = 1.
//
// Arithmetic between two surds requires a common radicand (or one side
// rational). Sign and comparison are exact.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(const Rational& value) : rational_(value) {}  // NOLINT(google-explicit-constructor)
  // radicand must be positive; square factors are moved into y.
  QuadraticSurd(const Rational& rational_part, const Rational& irrational_part,
                const Integer& radicand);

  // Exact square root of a nonnegative rational.
  static QuadraticSurd sqrt(const Rational& value);

  const Rational& rational_part() const { return rational_; }
  const Rational& irrational_part() const { return irrational_; }
  const Integer& radicand() const { return radicand_; }
  bool is_rational() const { return irrational_.is_zero(); }

  int sign() const;
  QuadraticSurd conjugate() const;
  // x^2 - d y^2
  Rational norm() const;

  QuadraticSurd& operator+=(const QuadraticSurd& rhs);
  QuadraticSurd& operator-=(const QuadraticSurd& rhs);
  QuadraticSurd& operator*=(const QuadraticSurd& rhs);
  QuadraticSurd& operator/=(const QuadraticSurd& rhs);

  friend QuadraticSurd operator+(QuadraticSurd lhs, const QuadraticSurd& rhs) { return lhs += rhs; }
  friend QuadraticSurd operator-(QuadraticSurd lhs, const QuadraticSurd& rhs) { return lhs -= rhs; }
  friend QuadraticSurd operator*(QuadraticSurd lhs, const QuadraticSurd& rhs) { return lhs *= rhs; }
  friend QuadraticSurd operator/(QuadraticSurd lhs, const QuadraticSurd& rhs) { return lhs /= rhs; }
  QuadraticSurd operator-() const;

  // Comparisons across different radicands are exact too (squared-sign
  // analysis), so they are not restricted like arithmetic.
  friend bool operator==(const QuadraticSurd& lhs, const QuadraticSurd& rhs);
  friend std::strong_ordering operator<=>(const QuadraticSurd& lhs, const QuadraticSurd& rhs);

  // Canonical "(p+q√d)/r" form, e.g. "(7+3√5)/2", "3+2√2", "5/2".
  std::string str() const;
  std::string decimal(int significant_digits = 12) const;
  double to_double() const;

 private:
  void normalize();

  Rational rational_;
  Rational irrational_;
  Integer radicand_ = 1;
};

std::ostream& operator<<(std::ostream& os, const QuadraticSurd& value);

// Splits n > 0 as s^2 * f with f squarefree (up to the trial-division limit
// for very large n). Returns {s, f}.
std::pair<Integer, Integer> extract_square_factor(const Integer& n);

}  // namespace staircase
