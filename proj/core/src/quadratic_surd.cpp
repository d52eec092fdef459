#include "staircase/quadratic_surd.hpp"

#include <ostream>

#include "mpfr_util.hpp"

namespace staircase {

namespace {

// Beyond this bound a remaining cofactor is only tested for being a perfect
// square, not fully factored.
constexpr unsigned long kTrialDivisionLimit = 1'000'000;

Integer isqrt(const Integer& n) {
  Integer out;
  mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
  return out;
}

bool is_square(const Integer& n) { return mpz_perfect_square_p(n.get_mpz_t()) != 0; }

}  // namespace

std::pair<Integer, Integer> extract_square_factor(const Integer& n) {
  if (n <= 0) {
    throw DomainError("square factor of a non-positive integer");
  }
  Integer square_root = 1;
  Integer rest = n;
  if (is_square(rest)) {
    return {isqrt(rest), Integer(1)};
  }
  for (unsigned long p = 2; p <= kTrialDivisionLimit; p += (p == 2 ? 1 : 2)) {
    const Integer p2 = Integer(p) * p;
    if (p2 > rest) {
      break;
    }
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p * p) != 0) {
      rest /= p2;
      square_root *= p;
    }
    if (is_square(rest)) {
      square_root *= isqrt(rest);
      return {square_root, Integer(1)};
    }
  }
  return {square_root, rest};
}

QuadraticSurd::QuadraticSurd(const Rational& rational_part, const Rational& irrational_part,
                             const Integer& radicand)
    : rational_(rational_part), irrational_(irrational_part), radicand_(radicand) {
  if (radicand_ <= 0) {
    throw DomainError("quadratic surd needs a positive radicand");
  }
  if (!irrational_.is_zero()) {
    auto [root, rest] = extract_square_factor(radicand_);
    irrational_ *= Rational(root);
    radicand_ = rest;
    if (radicand_ == 1) {
      rational_ += irrational_;
      irrational_ = Rational();
    }
  }
  normalize();
}

// The radicand is already squarefree here; only the rational case needs
// canonicalizing.
void QuadraticSurd::normalize() {
  if (irrational_.is_zero()) {
    radicand_ = 1;
  }
}

QuadraticSurd QuadraticSurd::sqrt(const Rational& value) {
  if (value.sign() < 0) {
    throw DomainError("square root of a negative rational");
  }
  if (value.is_zero()) {
    return QuadraticSurd();
  }
  // sqrt(p/q) = sqrt(p q) / q
  const Integer q = value.denominator();
  return QuadraticSurd(Rational(), Rational(Integer(1), q), Integer(value.numerator() * q));
}

int QuadraticSurd::sign() const {
  const int sx = rational_.sign();
  const int sy = irrational_.sign();
  if (sy == 0) {
    return sx;
  }
  if (sx == 0 || sx == sy) {
    return sy;
  }
  // Opposite signs: the larger of x^2 and d y^2 wins. They cannot be equal
  // since d is not a perfect square.
  const Rational x2 = rational_ * rational_;
  const Rational dy2 = irrational_ * irrational_ * Rational(radicand_);
  return x2 > dy2 ? sx : sy;
}

QuadraticSurd QuadraticSurd::conjugate() const {
  QuadraticSurd out = *this;
  out.irrational_ = -out.irrational_;
  return out;
}

Rational QuadraticSurd::norm() const {
  return rational_ * rational_ - irrational_ * irrational_ * Rational(radicand_);
}

namespace {

Integer common_radicand(const QuadraticSurd& lhs, const QuadraticSurd& rhs) {
  if (lhs.is_rational()) {
    return rhs.radicand();
  }
  if (rhs.is_rational() || lhs.radicand() == rhs.radicand()) {
    return lhs.radicand();
  }
  throw DomainError("arithmetic between surds of different quadratic fields");
}

}  // namespace

QuadraticSurd& QuadraticSurd::operator+=(const QuadraticSurd& rhs) {
  radicand_ = common_radicand(*this, rhs);
  rational_ += rhs.rational_;
  irrational_ += rhs.irrational_;
  normalize();
  return *this;
}

QuadraticSurd& QuadraticSurd::operator-=(const QuadraticSurd& rhs) { return *this += -rhs; }

QuadraticSurd& QuadraticSurd::operator*=(const QuadraticSurd& rhs) {
  const Integer d = common_radicand(*this, rhs);
  const Rational x = rational_ * rhs.rational_ + irrational_ * rhs.irrational_ * Rational(d);
  const Rational y = rational_ * rhs.irrational_ + irrational_ * rhs.rational_;
  rational_ = x;
  irrational_ = y;
  radicand_ = d;
  normalize();
  return *this;
}

QuadraticSurd& QuadraticSurd::operator/=(const QuadraticSurd& rhs) {
  common_radicand(*this, rhs);
  const Rational n = rhs.norm();
  if (n.is_zero()) {
    throw DomainError("division by zero surd");
  }
  *this *= rhs.conjugate();
  rational_ /= n;
  irrational_ /= n;
  return *this;
}

QuadraticSurd QuadraticSurd::operator-() const {
  QuadraticSurd out = *this;
  out.rational_ = -out.rational_;
  out.irrational_ = -out.irrational_;
  return out;
}

namespace {

// sign(lhs - rhs) when the radicands differ and both sides are irrational.
// Moves everything to the form u = y1*sqrt(d1) - y2*sqrt(d2) vs v = x2 - x1
// and squares twice, tracking signs.
int compare_different_radicands(const QuadraticSurd& lhs, const QuadraticSurd& rhs) {
  const Rational v = rhs.rational_part() - lhs.rational_part();
  const QuadraticSurd p(Rational(), lhs.irrational_part(), lhs.radicand());
  const QuadraticSurd q(Rational(), rhs.irrational_part(), rhs.radicand());
  // sign(u) where u = p - q, p and q pure surds.
  const int sp = p.sign();
  const int sq = q.sign();
  int su;
  if (sp == 0 || sq == 0 || sp != sq) {
    su = sp != 0 ? sp : -sq;
  } else {
    const Rational p2 = p.irrational_part() * p.irrational_part() * Rational(p.radicand());
    const Rational q2 = q.irrational_part() * q.irrational_part() * Rational(q.radicand());
    su = p2 == q2 ? 0 : (p2 > q2 ? sp : -sp);
  }
  // Want sign(u - v).
  const int sv = v.sign();
  if (su == 0 || sv == 0 || su != sv) {
    return su != 0 ? su : -sv;
  }
  // Same sign: compare u^2 with v^2, where
  // u^2 = p^2 + q^2 - 2 y1 y2 sqrt(d1 d2) lives in Q(sqrt(d1 d2)).
  const Rational p2 = p.irrational_part() * p.irrational_part() * Rational(p.radicand());
  const Rational q2 = q.irrational_part() * q.irrational_part() * Rational(q.radicand());
  const QuadraticSurd u2(p2 + q2, Rational(-2) * p.irrational_part() * q.irrational_part(),
                         Integer(p.radicand() * q.radicand()));
  const QuadraticSurd diff = u2 - QuadraticSurd(v * v);
  const int s = diff.sign();
  return su > 0 ? s : -s;
}

}  // namespace

bool operator==(const QuadraticSurd& lhs, const QuadraticSurd& rhs) {
  return (lhs <=> rhs) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const QuadraticSurd& lhs, const QuadraticSurd& rhs) {
  int s;
  if (lhs.is_rational() || rhs.is_rational() || lhs.radicand() == rhs.radicand()) {
    s = (lhs - rhs).sign();
  } else {
    s = compare_different_radicands(lhs, rhs);
  }
  return s <=> 0;
}

std::string QuadraticSurd::str() const {
  if (is_rational()) {
    return rational_.str();
  }
  const Integer r = lcm(rational_.denominator(), irrational_.denominator());
  const Integer p = rational_.numerator() * (r / rational_.denominator());
  const Integer q = irrational_.numerator() * (r / irrational_.denominator());

  std::string body;
  if (p != 0) {
    body = p.get_str();
    body += q < 0 ? "-" : "+";
  } else if (q < 0) {
    body = "-";
  }
  const Integer abs_q = abs(q);
  if (abs_q != 1) {
    body += abs_q.get_str();
  }
  body += "√" + radicand_.get_str();
  if (r == 1) {
    return body;
  }
  if (p != 0) {
    body = "(" + body + ")";
  }
  return body + "/" + r.get_str();
}

std::string QuadraticSurd::decimal(int significant_digits) const {
  const mpfr_prec_t bits = detail::bits_for_digits(significant_digits) + 64;
  detail::MpfrValue root(bits);
  detail::MpfrValue acc(bits);
  mpfr_set_z(root.get(), radicand_.get_mpz_t(), MPFR_RNDN);
  mpfr_sqrt(root.get(), root.get(), MPFR_RNDN);
  mpfr_mul_q(root.get(), root.get(), irrational_.raw().get_mpq_t(), MPFR_RNDN);
  mpfr_set_q(acc.get(), rational_.raw().get_mpq_t(), MPFR_RNDN);
  mpfr_add(acc.get(), acc.get(), root.get(), MPFR_RNDN);
  return detail::format_significant(acc, significant_digits);
}

double QuadraticSurd::to_double() const {
  detail::MpfrValue root(128);
  mpfr_set_z(root.get(), radicand_.get_mpz_t(), MPFR_RNDN);
  mpfr_sqrt(root.get(), root.get(), MPFR_RNDN);
  mpfr_mul_q(root.get(), root.get(), irrational_.raw().get_mpq_t(), MPFR_RNDN);
  mpfr_add_q(root.get(), root.get(), rational_.raw().get_mpq_t(), MPFR_RNDN);
  return mpfr_get_d(root.get(), MPFR_RNDN);
}

std::ostream& operator<<(std::ostream& os, const QuadraticSurd& value) { return os << value.str(); }

}  // namespace staircase
