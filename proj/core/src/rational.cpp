#include "staircase/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <vector>

#include "mpfr_util.hpp"

namespace staircase {

namespace detail {

std::string format_significant(const MpfrValue& value, int significant_digits) {
  significant_digits = std::max(significant_digits, 1);
  if (mpfr_zero_p(value.get())) {
    return "0";
  }
  // %Rg switches to exponent notation for very small or very large values,
  // which is what plotting tools expect.
  const int length = mpfr_snprintf(nullptr, 0, "%.*Rg", significant_digits, value.get());
  std::vector<char> buffer(static_cast<std::size_t>(length) + 1);
  mpfr_snprintf(buffer.data(), buffer.size(), "%.*Rg", significant_digits, value.get());
  return std::string(buffer.data(), static_cast<std::size_t>(length));
}

}  // namespace detail

namespace {

bool all_digits(std::string_view text) {
  return !text.empty() && std::all_of(text.begin(), text.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

}  // namespace

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) {
    throw DomainError("rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string token(text);
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                                : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational literal '" + token + "'");
  }
  Integer n(std::string(num), 10);
  const Integer d(std::string(den), 10);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in rational literal '" + token + "'");
  }
  if (negative) {
    n = -n;
  }
  return Rational(n, d);
}

Integer floor_div(const Integer& numerator, const Integer& denominator) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  return out;
}

Integer Rational::floor() const { return floor_div(value_.get_num(), value_.get_den()); }

Integer Rational::ceil() const {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

Rational Rational::fractional_part() const { return *this - Rational(floor()); }

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::reciprocal() const {
  if (is_zero()) {
    throw DomainError("reciprocal of zero");
  }
  return Rational(value_.get_den(), value_.get_num());
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw DomainError("division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::string Rational::str() const {
  if (is_integer()) {
    return value_.get_num().get_str();
  }
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::decimal(int significant_digits) const {
  detail::MpfrValue v(detail::bits_for_digits(significant_digits));
  mpfr_set_q(v.get(), value_.get_mpq_t(), MPFR_RNDN);
  return detail::format_significant(v, significant_digits);
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

Rational min(const Rational& lhs, const Rational& rhs) { return rhs < lhs ? rhs : lhs; }
Rational max(const Rational& lhs, const Rational& rhs) { return lhs < rhs ? rhs : lhs; }

Integer gcd(const Integer& lhs, const Integer& rhs) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), lhs.get_mpz_t(), rhs.get_mpz_t());
  return out;
}

Integer lcm(const Integer& lhs, const Integer& rhs) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), lhs.get_mpz_t(), rhs.get_mpz_t());
  return out;
}

Rational rational_gcd(const Rational& lhs, const Rational& rhs) {
  if (lhs.is_zero() && rhs.is_zero()) {
    throw DomainError("gcd of two zeros");
  }
  // gcd(a/b, c/d) = gcd(a, c) / lcm(b, d)
  return Rational(gcd(lhs.numerator(), rhs.numerator()),
                  lcm(lhs.denominator(), rhs.denominator()));
}

}  // namespace staircase
