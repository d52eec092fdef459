#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "staircase/rational.hpp"

using oracle::q;
using staircase::DomainError;
using staircase::Integer;
using staircase::Rational;

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(Rational::parse("4/3"), q(4, 3));
  EXPECT_EQ(Rational::parse("-7"), q(-7));
  EXPECT_EQ(Rational::parse("6/4"), q(3, 2));
  EXPECT_EQ(Rational::parse("0/5"), q(0));
}

TEST(Rational, RejectsMalformedLiteralsNamingTheToken) {
  for (const char* bad : {"", "1/", "/2", "1.5", "abc", "1/0", "2/-3", "1 /2", "--1"}) {
    try {
      (void)Rational::parse(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const std::invalid_argument& e) {
      EXPECT_NE(std::string(e.what()).find(std::string("'") + bad + "'"), std::string::npos)
          << e.what();
    }
  }
}

TEST(Rational, ZeroDenominatorIsADomainError) {
  EXPECT_THROW(Rational(Integer(1), Integer(0)), DomainError);
  EXPECT_THROW((void)q(0).reciprocal(), DomainError);
}

TEST(Rational, FloorCeilAndFractionalPartOnNegatives) {
  EXPECT_EQ(q(-7, 2).floor(), -4);
  EXPECT_EQ(q(-7, 2).ceil(), -3);
  EXPECT_EQ(q(-7, 2).fractional_part(), q(1, 2));
  EXPECT_EQ(q(9, 3).floor(), 3);
  EXPECT_EQ(q(9, 3).ceil(), 3);
}

TEST(Rational, GcdOfRationalsDividesBoth) {
  EXPECT_EQ(staircase::rational_gcd(q(3, 2), q(2)), q(1, 2));
  EXPECT_EQ(staircase::rational_gcd(q(9, 4), q(3)), q(3, 4));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(1, 500);
  for (int i = 0; i < 200; ++i) {
    const Rational a = q(d(rng), d(rng));
    const Rational b = q(d(rng), d(rng));
    const Rational g = staircase::rational_gcd(a, b);
    EXPECT_TRUE((a / g).is_integer());
    EXPECT_TRUE((b / g).is_integer());
    EXPECT_EQ(staircase::gcd((a / g).numerator(), (b / g).numerator()), 1);
  }
}

TEST(Rational, StringRoundTrip) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-1'000'000, 1'000'000);
  for (int i = 0; i < 500; ++i) {
    long den = d(rng);
    if (den == 0) {
      den = 1;
    }
    const Rational value = q(d(rng), den);
    EXPECT_EQ(Rational::parse(value.str()), value) << value.str();
  }
  const Rational huge = Rational(Integer("123456789012345678901234567890")) / q(7);
  EXPECT_EQ(Rational::parse(huge.str()), huge);
}

TEST(Rational, DecimalUsesSignificantDigits) {
  EXPECT_EQ(q(1, 3).decimal(5), "0.33333");
  EXPECT_EQ(q(4).decimal(12), "4");
  EXPECT_EQ(q(-13, 8).decimal(12), "-1.625");
}

TEST(Rational, OrderingIsExact) {
  const Rational a = q(1'000'000'001, 1'000'000'000);
  const Rational b = q(1'000'000'000, 999'999'999);
  EXPECT_LT(a, b);
  EXPECT_EQ(staircase::min(a, b), a);
  EXPECT_EQ(staircase::max(a, b), b);
}
