#include "staircase/ehrhart.hpp"

#include <limits>
#include <string>

namespace staircase {

namespace {

std::size_t bit_length(const Integer& n) { return mpz_sizeinbase(n.get_mpz_t(), 2); }

std::int64_t to_int64(const Integer& n, const char* what) {
  if (!n.fits_slong_p()) {
    throw DomainError(std::string(what) + " does not fit in 64 bits");
  }
  return n.get_si();
}

std::size_t residue(std::int64_t t, std::int64_t period) {
  return static_cast<std::size_t>(((t % period) + period) % period);
}

}  // namespace

RightTriangle::RightTriangle(const Rational& u, const Rational& v) : u_(u), v_(v) {
  if (u_.sign() <= 0 || v_.sign() <= 0) {
    throw DomainError("triangle legs must be positive, got T(" + u.str() + ", " + v.str() + ")");
  }
}

RightTriangle RightTriangle::reciprocal_legs(const Ellipsoid& ellipsoid) {
  return RightTriangle(ellipsoid.a().reciprocal(), ellipsoid.b().reciprocal());
}

Integer triangle_count(const RightTriangle& triangle, std::int64_t t) {
  if (t < 0) {
    throw DomainError("dilation factor must be nonnegative");
  }
  if (t == 0) {
    return Integer(1);
  }
  const Integer un = triangle.u().numerator();
  const Integer ud = triangle.u().denominator();
  const Integer vn = triangle.v().numerator();
  const Integer vd = triangle.v().denominator();
  const Integer tz(static_cast<long>(t));

  // Row y holds x = 0..floor(un (t vn - y vd) / (ud vn)).
  const Integer y_max = floor_div(tz * vn, vd);
  const std::size_t bits = bit_length(un) + bit_length(vn) + bit_length(vd) + bit_length(ud) +
                           bit_length(tz) + bit_length(y_max);
  const bool word_sized = un.fits_slong_p() && ud.fits_slong_p() && vn.fits_slong_p() &&
                          vd.fits_slong_p() && y_max.fits_slong_p();
  if (word_sized && bits < 120) {
    __extension__ typedef __int128 Wide;
    const auto wide = [](const Integer& n) { return static_cast<Wide>(n.get_si()); };
    const Wide num = wide(un);
    const Wide top = wide(tz) * wide(vn);
    const Wide step = wide(vd);
    const Wide den = wide(ud) * wide(vn);
    Wide total = 0;
    for (long y = 0, last = y_max.get_si(); y <= last; ++y) {
      total += num * (top - step * y) / den + 1;
    }
    if (total <= std::numeric_limits<long>::max()) {
      return Integer(static_cast<long>(total));
    }
    Integer out(static_cast<long>(total >> 62));
    out <<= 62;
    out += Integer(static_cast<long>(total & ((Wide(1) << 62) - 1)));
    return out;
  }

  Integer total = 0;
  const Integer den = ud * vn;
  Integer row;
  for (Integer y = 0; y <= y_max; ++y) {
    row = un * (tz * vn - y * vd);
    total += floor_div(row, den) + 1;
  }
  return total;
}

QuasiPolynomial::QuasiPolynomial(std::int64_t period, Rational leading,
                                 std::vector<Rational> linear, std::vector<Rational> constant)
    : period_(period),
      leading_(std::move(leading)),
      linear_(std::move(linear)),
      constant_(std::move(constant)) {
  if (period_ < 1 || linear_.size() != static_cast<std::size_t>(period_) ||
      constant_.size() != static_cast<std::size_t>(period_)) {
    throw DomainError("quasi-polynomial coefficient lists must match the period");
  }
}

Rational QuasiPolynomial::operator()(std::int64_t t) const {
  const std::size_t r = residue(t, period_);
  const Rational tq(t);
  return leading_ * tq * tq + linear_[r] * tq + constant_[r];
}

QuasiPolynomial fit_quasi_polynomial(const RightTriangle& triangle) {
  const std::int64_t period =
      to_int64(lcm(triangle.u().denominator(), triangle.v().denominator()), "period");
  const Rational leading = triangle.u() * triangle.v() / Rational(2);
  std::vector<Rational> linear;
  std::vector<Rational> constant;
  linear.reserve(static_cast<std::size_t>(period));
  constant.reserve(static_cast<std::size_t>(period));

  for (std::int64_t r = 0; r < period; ++r) {
    const Rational t0(r);
    const Rational t1(r + period);
    const Rational l0(triangle_count(triangle, r));
    const Rational l1(triangle_count(triangle, r + period));
    const Rational b = (l1 - l0 - leading * (t1 * t1 - t0 * t0)) / Rational(period);
    linear.push_back(b);
    constant.push_back(l0 - leading * t0 * t0 - b * t0);
  }
  QuasiPolynomial fitted(period, leading, std::move(linear), std::move(constant));

  for (std::int64_t r = 0; r < period; ++r) {
    for (const std::int64_t t : {r + 2 * period, r + 3 * period}) {
      if (fitted(t) != Rational(triangle_count(triangle, t))) {
        throw InternalError("fitted quasi-polynomial disagrees with lattice count at t = " +
                            std::to_string(t));
      }
    }
  }
  return fitted;
}

DominationVerdict ehrhart_dominates(const RightTriangle& lhs, const RightTriangle& rhs,
                                    std::int64_t t_max) {
  if (t_max < 1) {
    throw DomainError("t_max must be positive");
  }
  DominationVerdict verdict;
  verdict.checked_up_to = t_max;
  for (std::int64_t t = 1; t <= t_max; ++t) {
    const Integer margin = triangle_count(lhs, t) - triangle_count(rhs, t);
    if (t == 1 || margin < verdict.min_margin) {
      verdict.min_margin = margin;
      verdict.min_margin_at = t;
    }
    if (margin < 0 && !verdict.first_failure) {
      verdict.holds = false;
      verdict.first_failure = t;
      verdict.checked_up_to = t;
      break;
    }
  }
  return verdict;
}

DominationVerdict ehrhart_dominates_exact(const RightTriangle& lhs, const RightTriangle& rhs,
                                          std::int64_t scan_limit) {
  const QuasiPolynomial p = fit_quasi_polynomial(lhs);
  const QuasiPolynomial q = fit_quasi_polynomial(rhs);
  const std::int64_t period =
      to_int64(lcm(Integer(static_cast<long>(p.period())), Integer(static_cast<long>(q.period()))),
               "common period");
  const Rational da = p.leading() - q.leading();

  // Beyond `bound` every residue class has the sign of its leading
  // difference coefficient.
  Rational bound(1);
  for (std::int64_t r = 0; r < period; ++r) {
    const Rational db = p.linear()[residue(r, p.period())] - q.linear()[residue(r, q.period())];
    const Rational dc =
        p.constant()[residue(r, p.period())] - q.constant()[residue(r, q.period())];
    Rational class_bound(1);
    if (!da.is_zero()) {
      class_bound = Rational(1) + max(db.abs(), dc.abs()) / da.abs();
    } else if (!db.is_zero()) {
      class_bound = Rational(1) + dc.abs() / db.abs();
    }
    bound = max(bound, class_bound);
  }
  const Integer scan_end = bound.ceil() + Integer(static_cast<long>(period));
  if (scan_end > Integer(static_cast<long>(scan_limit))) {
    throw DomainError("exact domination check needs a scan to t = " + scan_end.get_str() +
                      ", beyond the limit " + std::to_string(scan_limit));
  }
  const std::int64_t t_end = scan_end.get_si();

  DominationVerdict verdict;
  verdict.exhaustive = true;
  verdict.checked_up_to = t_end;
  for (std::int64_t t = 1; t <= t_end; ++t) {
    const Rational margin = p(t) - q(t);
    const Integer margin_int = margin.floor();
    if (t == 1 || margin_int < verdict.min_margin) {
      verdict.min_margin = margin_int;
      verdict.min_margin_at = t;
    }
    if (margin.sign() < 0) {
      verdict.holds = false;
      verdict.first_failure = t;
      verdict.checked_up_to = t;
      break;
    }
  }
  return verdict;
}

namespace {

struct NormalizedPair {
  Rational factor;
  RightTriangle source;
  RightTriangle target;
};

NormalizedPair normalize_pair(const Ellipsoid& source, const Ellipsoid& target) {
  const Rational factor = rational_gcd(target.a(), target.b()).reciprocal();
  return {factor, RightTriangle::reciprocal_legs(source.scaled(factor)),
          RightTriangle::reciprocal_legs(target.scaled(factor))};
}

}  // namespace

EmbeddingVerdict embedding_decision(const Ellipsoid& source, const Ellipsoid& target,
                                    std::int64_t t_max) {
  NormalizedPair pair = normalize_pair(source, target);
  DominationVerdict domination = ehrhart_dominates(pair.source, pair.target, t_max);
  return {std::move(domination), pair.factor, pair.source, pair.target, true};
}

EmbeddingVerdict embedding_decision_exact(const Ellipsoid& source, const Ellipsoid& target) {
  NormalizedPair pair = normalize_pair(source, target);
  DominationVerdict domination = ehrhart_dominates_exact(pair.source, pair.target);
  return {std::move(domination), pair.factor, pair.source, pair.target, false};
}

}  // namespace staircase
