#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "staircase/quadratic_surd.hpp"
#include "staircase/rational.hpp"

namespace staircase {

// Raised when a floor/ceil or comparison cannot be decided within the
// precision ladder. For irrational inputs this indicates a bug; for
// rational inputs it cannot happen since those take the exact path.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Closed interval with exact rational endpoints.
struct Interval {
  Rational lower;
  Rational upper;

  Rational width() const { return upper - lower; }
  bool contains(const Rational& value) const { return lower <= value && value <= upper; }
};

// Working precisions (bits) tried in order before giving up.
inline constexpr std::array<int, 3> kPrecisionLadder = {64, 128, 256};

// A real scalar that is either an exact rational, an exact quadratic surd,
// or offset + scale * c for a transcendental constant c. Non-rational values
// are accessed through rational enclosures produced with directed rounding.
class Real {
 public:
  enum class Constant { pi, e };

  struct Affine {
    Rational offset;
    Rational scale;
    Constant constant = Constant::pi;
  };

  Real() = default;
  Real(const Rational& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Real(const QuadraticSurd& value);               // NOLINT(google-explicit-constructor)
  static Real affine(const Rational& offset, const Rational& scale, Constant constant);

  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  std::optional<Rational> as_rational() const;

  // Enclosure [lo, hi] of the value, tight to roughly 2^-bits relative.
  Interval enclose(int bits) const;

  // Exact for rationals and surds; adaptive for constants.
  int compare(const Rational& rhs) const;

  std::string str() const;
  std::string decimal(int significant_digits = 12) const;

 private:
  std::variant<Rational, QuadraticSurd, Affine> value_;
};

// floor/ceil of offset + slope * x with lazily refined enclosures of x.
// The enclosure cache is local to one instance.
class AffineRounder {
 public:
  explicit AffineRounder(const Real& x) : x_(x) {}

  Integer floor(const Rational& offset, const Rational& slope);
  Integer ceil(const Rational& offset, const Rational& slope);
  // Tightest enclosure of offset + slope * x computed so far (at least the
  // coarsest ladder rung). Exact (degenerate) for rational x.
  Interval enclose(const Rational& offset, const Rational& slope);
  // Whether offset + slope * x is an integer. Only decidable by exact
  // values: for non-rational x it is an integer iff slope == 0 and offset is.
  bool is_integer(const Rational& offset, const Rational& slope) const;

 private:
  const Interval& rung(std::size_t index);
  Interval map(const Interval& base, const Rational& offset, const Rational& slope) const;

  const Real& x_;
  std::array<std::optional<Interval>, kPrecisionLadder.size()> cache_;
  std::size_t finest_ = 0;
};

}  // namespace staircase
