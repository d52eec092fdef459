#include "staircase/real.hpp"

#include "mpfr_util.hpp"

namespace staircase {

namespace {

struct Bounds {
  mpq_class lower;
  mpq_class upper;
};

Bounds constant_bounds(Real::Constant constant, int bits) {
  detail::MpfrValue lo(bits);
  detail::MpfrValue hi(bits);
  switch (constant) {
    case Real::Constant::pi:
      mpfr_const_pi(lo.get(), MPFR_RNDD);
      mpfr_const_pi(hi.get(), MPFR_RNDU);
      break;
    case Real::Constant::e:
      mpfr_set_ui(lo.get(), 1, MPFR_RNDN);
      mpfr_set_ui(hi.get(), 1, MPFR_RNDN);
      mpfr_exp(lo.get(), lo.get(), MPFR_RNDD);
      mpfr_exp(hi.get(), hi.get(), MPFR_RNDU);
      break;
  }
  return {lo.to_rational(), hi.to_rational()};
}

Bounds sqrt_bounds(const Integer& radicand, int bits) {
  detail::MpfrValue lo(bits);
  detail::MpfrValue hi(bits);
  mpfr_set_z(lo.get(), radicand.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi.get(), radicand.get_mpz_t(), MPFR_RNDU);
  mpfr_sqrt(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_sqrt(hi.get(), hi.get(), MPFR_RNDU);
  return {lo.to_rational(), hi.to_rational()};
}

Interval affine_image(const Rational& offset, const Rational& scale, const Bounds& b) {
  Rational lo = offset + scale * Rational(b.lower);
  Rational hi = offset + scale * Rational(b.upper);
  if (scale.sign() < 0) {
    std::swap(lo, hi);
  }
  return {lo, hi};
}

const char* constant_name(Real::Constant constant) {
  return constant == Real::Constant::pi ? "pi" : "e";
}

}  // namespace

Real::Real(const QuadraticSurd& value) {
  if (value.is_rational()) {
    value_ = value.rational_part();
  } else {
    value_ = value;
  }
}

Real Real::affine(const Rational& offset, const Rational& scale, Constant constant) {
  Real out;
  if (scale.is_zero()) {
    out.value_ = offset;
  } else {
    out.value_ = Affine{offset, scale, constant};
  }
  return out;
}

std::optional<Rational> Real::as_rational() const {
  if (const auto* q = std::get_if<Rational>(&value_)) {
    return *q;
  }
  return std::nullopt;
}

Interval Real::enclose(int bits) const {
  if (const auto* q = std::get_if<Rational>(&value_)) {
    return {*q, *q};
  }
  if (const auto* s = std::get_if<QuadraticSurd>(&value_)) {
    return affine_image(s->rational_part(), s->irrational_part(), sqrt_bounds(s->radicand(), bits));
  }
  const auto& a = std::get<Affine>(value_);
  return affine_image(a.offset, a.scale, constant_bounds(a.constant, bits));
}

int Real::compare(const Rational& rhs) const {
  if (const auto* q = std::get_if<Rational>(&value_)) {
    return (*q - rhs).sign();
  }
  if (const auto* s = std::get_if<QuadraticSurd>(&value_)) {
    return (*s - QuadraticSurd(rhs)).sign();
  }
  for (const int bits : kPrecisionLadder) {
    const Interval box = enclose(bits);
    if (box.lower > rhs) {
      return 1;
    }
    if (box.upper < rhs) {
      return -1;
    }
  }
  throw PrecisionError("comparison of " + str() + " with " + rhs.str() +
                       " undecided at maximum precision");
}

std::string Real::str() const {
  if (const auto* q = std::get_if<Rational>(&value_)) {
    return q->str();
  }
  if (const auto* s = std::get_if<QuadraticSurd>(&value_)) {
    return s->str();
  }
  const auto& a = std::get<Affine>(value_);
  std::string out;
  if (!a.offset.is_zero()) {
    out = a.offset.str() + (a.scale.sign() < 0 ? "-" : "+");
  } else if (a.scale.sign() < 0) {
    out = "-";
  }
  const Rational mag = a.scale.abs();
  if (mag != Rational(1)) {
    out += mag.str() + "*";
  }
  return out + constant_name(a.constant);
}

std::string Real::decimal(int significant_digits) const {
  if (const auto* q = std::get_if<Rational>(&value_)) {
    return q->decimal(significant_digits);
  }
  if (const auto* s = std::get_if<QuadraticSurd>(&value_)) {
    return s->decimal(significant_digits);
  }
  const Interval box = enclose(static_cast<int>(detail::bits_for_digits(significant_digits)));
  return ((box.lower + box.upper) / Rational(2)).decimal(significant_digits);
}

const Interval& AffineRounder::rung(std::size_t index) {
  if (!cache_[index]) {
    cache_[index] = x_.enclose(kPrecisionLadder[index]);
  }
  finest_ = std::max(finest_, index);
  return *cache_[index];
}

Interval AffineRounder::map(const Interval& base, const Rational& offset,
                            const Rational& slope) const {
  Rational lo = offset + slope * base.lower;
  Rational hi = offset + slope * base.upper;
  if (slope.sign() < 0) {
    std::swap(lo, hi);
  }
  return {lo, hi};
}

Integer AffineRounder::floor(const Rational& offset, const Rational& slope) {
  if (slope.is_zero()) {
    return offset.floor();
  }
  if (const auto q = x_.as_rational()) {
    return (offset + slope * *q).floor();
  }
  for (std::size_t i = 0; i < kPrecisionLadder.size(); ++i) {
    const Interval box = map(rung(i), offset, slope);
    Integer lo = box.lower.floor();
    if (lo == box.upper.floor()) {
      return lo;
    }
  }
  throw PrecisionError("floor of " + offset.str() + " + " + slope.str() + " * (" + x_.str() +
                       ") undecided at maximum precision");
}

Integer AffineRounder::ceil(const Rational& offset, const Rational& slope) {
  if (slope.is_zero()) {
    return offset.ceil();
  }
  if (const auto q = x_.as_rational()) {
    return (offset + slope * *q).ceil();
  }
  for (std::size_t i = 0; i < kPrecisionLadder.size(); ++i) {
    const Interval box = map(rung(i), offset, slope);
    Integer lo = box.lower.ceil();
    if (lo == box.upper.ceil()) {
      return lo;
    }
  }
  throw PrecisionError("ceil of " + offset.str() + " + " + slope.str() + " * (" + x_.str() +
                       ") undecided at maximum precision");
}

Interval AffineRounder::enclose(const Rational& offset, const Rational& slope) {
  if (const auto q = x_.as_rational()) {
    const Rational v = offset + slope * *q;
    return {v, v};
  }
  rung(0);
  return map(*cache_[finest_], offset, slope);
}

bool AffineRounder::is_integer(const Rational& offset, const Rational& slope) const {
  if (const auto q = x_.as_rational()) {
    return (offset + slope * *q).is_integer();
  }
  return slope.is_zero() && offset.is_integer();
}

}  // namespace staircase
