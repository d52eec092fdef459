#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace staircase {

using Integer = mpz_class;

// Raised when an operation is called outside its mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exact fraction of arbitrary-precision integers, always in lowest terms
// with a positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral I>
  Rational(I value) : value_(static_cast<unsigned long>(value)) {}  // NOLINT(google-explicit-constructor)

  Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  // Throws DomainError if denominator is zero.
  Rational(const Integer& numerator, const Integer& denominator);

  explicit Rational(const mpq_class& value);

  // Accepts "p", "-p", "p/q" with decimal digits only. Throws
  // std::invalid_argument naming the offending token.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Integer floor() const;
  Integer ceil() const;
  // z - floor(z), always in [0, 1).
  Rational fractional_part() const;

  Rational abs() const;
  Rational reciprocal() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

  // "p/q", or "p" when integral.
  std::string str() const;
  // Decimal rendering with the given number of significant digits.
  std::string decimal(int significant_digits = 12) const;
  double to_double() const { return value_.get_d(); }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

Rational min(const Rational& lhs, const Rational& rhs);
Rational max(const Rational& lhs, const Rational& rhs);

Integer floor_div(const Integer& numerator, const Integer& denominator);
Integer lcm(const Integer& lhs, const Integer& rhs);
Integer gcd(const Integer& lhs, const Integer& rhs);

// Largest rational g such that lhs/g and rhs/g are both integers.
Rational rational_gcd(const Rational& lhs, const Rational& rhs);

}  // namespace staircase
