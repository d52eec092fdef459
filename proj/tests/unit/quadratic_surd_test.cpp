#include <random>

#include <gtest/gtest.h>
#include <mpfr.h>

#include "oracles.hpp"
#include "staircase/quadratic_surd.hpp"

using oracle::q;
using staircase::DomainError;
using staircase::Integer;
using staircase::QuadraticSurd;
using staircase::Rational;

namespace {

// x + y sqrt(d) rounded to 2000 bits.
void evaluate(const QuadraticSurd& s, mpfr_t out) {
  mpfr_t root;
  mpfr_init2(root, 2000);
  mpfr_set_z(root, s.radicand().get_mpz_t(), MPFR_RNDN);
  mpfr_sqrt(root, root, MPFR_RNDN);
  mpfr_mul_q(root, root, s.irrational_part().raw().get_mpq_t(), MPFR_RNDN);
  mpfr_add_q(out, root, s.rational_part().raw().get_mpq_t(), MPFR_RNDN);
  mpfr_clear(root);
}

// Sign of a - b at 2000 bits. The inputs below have small coefficients, so
// any nonzero difference is far above the rounding error.
int high_precision_compare(const QuadraticSurd& a, const QuadraticSurd& b) {
  mpfr_t x;
  mpfr_t y;
  mpfr_inits2(2000, x, y, static_cast<mpfr_ptr>(nullptr));
  evaluate(a, x);
  evaluate(b, y);
  mpfr_sub(x, x, y, MPFR_RNDN);
  const int out = mpfr_zero_p(x) ? 0 : mpfr_sgn(x);
  mpfr_clears(x, y, static_cast<mpfr_ptr>(nullptr));
  return out;
}

}  // namespace

TEST(QuadraticSurd, SquareFactorsMoveOutOfTheRadicand) {
  const QuadraticSurd s(q(0), q(1), Integer(72));  // sqrt(72) = 6 sqrt(2)
  EXPECT_EQ(s.radicand(), 2);
  EXPECT_EQ(s.irrational_part(), q(6));
  EXPECT_TRUE(QuadraticSurd(q(1), q(3), Integer(49)).is_rational());
  EXPECT_EQ(QuadraticSurd(q(1), q(3), Integer(49)), QuadraticSurd(q(22)));
}

TEST(QuadraticSurd, SqrtOfRationals) {
  EXPECT_EQ(QuadraticSurd::sqrt(q(9, 4)), QuadraticSurd(q(3, 2)));
  const QuadraticSurd r = QuadraticSurd::sqrt(q(5, 3));  // sqrt(15)/3
  EXPECT_EQ(r.radicand(), 15);
  EXPECT_EQ(r.irrational_part(), q(1, 3));
  EXPECT_EQ(r * r, QuadraticSurd(q(5, 3)));
  EXPECT_THROW((void)QuadraticSurd::sqrt(q(-1)), DomainError);
}

TEST(QuadraticSurd, Formatting) {
  EXPECT_EQ(QuadraticSurd(q(7, 2), q(3, 2), Integer(5)).str(), "(7+3√5)/2");
  EXPECT_EQ(QuadraticSurd(q(3), q(2), Integer(2)).str(), "3+2√2");
  EXPECT_EQ(QuadraticSurd(q(0), q(-1), Integer(3)).str(), "-√3");
  EXPECT_EQ(QuadraticSurd(q(5, 2)).str(), "5/2");
  EXPECT_EQ(QuadraticSurd(q(7, 2), q(3, 2), Integer(5)).decimal(10), "6.854101966");
}

TEST(QuadraticSurd, FieldArithmetic) {
  const QuadraticSurd a(q(1), q(2), Integer(3));
  const QuadraticSurd b(q(-4, 5), q(1, 7), Integer(3));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(a * a.conjugate(), QuadraticSurd(a.norm()));
  EXPECT_EQ(a - a, QuadraticSurd(q(0)));
  EXPECT_THROW((void)(a + QuadraticSurd(q(0), q(1), Integer(2))), DomainError);
}

TEST(QuadraticSurd, SignOfNearCancellation) {
  // 99 - 70 sqrt(2) = 1/(99 + 70 sqrt(2)) > 0, about 0.005
  EXPECT_EQ(QuadraticSurd(q(99), q(-70), Integer(2)).sign(), 1);
  // (3 + 2 sqrt(2))^12 = x + y sqrt(2) with x - y sqrt(2) about 1e-18.
  QuadraticSurd unit(q(3), q(2), Integer(2));
  QuadraticSurd power(q(1));
  for (int i = 0; i < 12; ++i) {
    power *= unit;
  }
  const QuadraticSurd tiny(power.rational_part(), -power.irrational_part(), Integer(2));
  EXPECT_EQ(tiny.sign(), 1);
  EXPECT_EQ((-tiny).sign(), -1);
}

TEST(QuadraticSurd, CrossRadicandComparisonAgreesWithHighPrecision) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> small(-50, 50);
  std::uniform_int_distribution<long> rad(2, 60);
  for (int i = 0; i < 2000; ++i) {
    const QuadraticSurd a(q(small(rng), 7), q(small(rng), 3), Integer(rad(rng)));
    const QuadraticSurd b(q(small(rng), 5), q(small(rng), 2), Integer(rad(rng)));
    const int expected = high_precision_compare(a, b);
    const auto cmp = a <=> b;
    EXPECT_EQ(cmp < 0, expected < 0) << a.str() << " vs " << b.str();
    EXPECT_EQ(cmp == 0, expected == 0) << a.str() << " vs " << b.str();
  }
}

TEST(QuadraticSurd, CrossRadicandEquality) {
  EXPECT_EQ(QuadraticSurd(q(0), q(1), Integer(8)), QuadraticSurd(q(0), q(2), Integer(2)));
  EXPECT_LT(QuadraticSurd(q(0), q(1), Integer(2)), QuadraticSurd(q(0), q(1), Integer(3)));
  EXPECT_LT(QuadraticSurd(q(1), q(1), Integer(2)), QuadraticSurd(q(0), q(1), Integer(6)));
  EXPECT_GT(QuadraticSurd(q(1), q(1), Integer(3)), QuadraticSurd(q(0), q(1), Integer(7)));
}
