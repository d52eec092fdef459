#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "staircase/ech.hpp"
#include "staircase/ehrhart.hpp"

using oracle::q;
using staircase::DomainError;
using staircase::Ellipsoid;
using staircase::Integer;
using staircase::QuasiPolynomial;
using staircase::Rational;
using staircase::RightTriangle;

TEST(TriangleCount, MatchesBoxEnumeration) {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> d(1, 9);
  for (int i = 0; i < 40; ++i) {
    const Rational u = q(d(rng), d(rng));
    const Rational v = q(d(rng), d(rng));
    for (std::int64_t t = 0; t <= 25; ++t) {
      ASSERT_EQ(staircase::triangle_count(RightTriangle(u, v), t), oracle::lattice_points(u, v, t))
          << "T(" << u.str() << ", " << v.str() << "), t = " << t;
    }
  }
}

TEST(TriangleCount, SymmetricUnderSwappingLegs) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> d(1, 30);
  for (int i = 0; i < 50; ++i) {
    const Rational u = q(d(rng), d(rng));
    const Rational v = q(d(rng), d(rng));
    for (std::int64_t t : {1, 7, 60, 211}) {
      EXPECT_EQ(staircase::triangle_count(RightTriangle(u, v), t),
                staircase::triangle_count(RightTriangle(v, u), t));
    }
  }
}

TEST(TriangleCount, CountsCapacitiesUpToT) {
  // #{k : c_k(E(a,b)) <= t} = L_{T(1/a, 1/b)}(t)
  const Ellipsoid e(q(3, 2), q(5, 2));
  const std::vector<Rational> caps = staircase::capacity_prefix(e, 400);
  const RightTriangle tri = RightTriangle::reciprocal_legs(e);
  for (std::int64_t t = 1; t <= 20; ++t) {
    const auto below = std::count_if(caps.begin(), caps.end(),
                                     [&](const Rational& c) { return c <= Rational(t); });
    EXPECT_EQ(staircase::triangle_count(tri, t), Integer(static_cast<long>(below)));
  }
}

TEST(TriangleCount, LargeArgumentsLeaveTheFastPath) {
  const Rational u(Integer("1000000000000000000000"), Integer(3));
  const RightTriangle tri(u, q(1, 1'000'000'000));
  EXPECT_EQ(staircase::triangle_count(tri, 1), (u.floor() + 1));
  EXPECT_THROW((void)staircase::triangle_count(RightTriangle(q(1), q(1)), -1), DomainError);
}

TEST(QuasiPolynomial, TablesForTheTwoReferenceTriangles) {
  const QuasiPolynomial c = staircase::fit_quasi_polynomial(RightTriangle(q(1, 2), q(1, 6)));
  EXPECT_EQ(c.period(), 6);
  EXPECT_EQ(c.leading(), q(1, 24));
  EXPECT_EQ(c.constant(),
            std::vector<Rational>({q(1), q(5, 8), q(1), q(5, 8), q(2, 3), q(7, 24)}));
  for (std::int64_t r = 0; r < 6; ++r) {
    EXPECT_EQ(c.linear()[r], r % 2 == 0 ? q(5, 12) : q(1, 3));
  }

  const QuasiPolynomial cp = staircase::fit_quasi_polynomial(RightTriangle(q(1, 3), q(1, 4)));
  EXPECT_EQ(cp.period(), 12);
  EXPECT_EQ(cp.leading(), q(1, 24));
  EXPECT_EQ(cp.constant(), std::vector<Rational>({q(1), q(5, 8), q(1, 6), q(5, 8), q(1),
                                                  q(7, 24), q(1, 2), q(5, 8), q(2, 3), q(5, 8),
                                                  q(1, 2), q(7, 24)}));
  for (const Rational& b : cp.linear()) {
    EXPECT_EQ(b, q(1, 3));
  }
}

TEST(QuasiPolynomial, AgreesWithCountsFarBeyondTheFit) {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<long> d(1, 8);
  for (int i = 0; i < 30; ++i) {
    const RightTriangle tri(q(d(rng), d(rng)), q(d(rng), d(rng)));
    const QuasiPolynomial qp = staircase::fit_quasi_polynomial(tri);
    EXPECT_EQ(qp.leading(), tri.u() * tri.v() / q(2));
    for (std::int64_t t = 0; t <= 8 * qp.period() + 40; ++t) {
      ASSERT_EQ(qp(t), Rational(staircase::triangle_count(tri, t)));
    }
  }
}

TEST(QuasiPolynomial, RejectsInconsistentCoefficients) {
  EXPECT_THROW(QuasiPolynomial(2, q(1), {q(1)}, {q(1), q(1)}), DomainError);
}

TEST(Domination, TruncatedAndExactAgree) {
  const RightTriangle big(q(1, 2), q(1, 4));
  const RightTriangle small(q(1, 3), q(1, 4));
  const auto truncated = staircase::ehrhart_dominates(big, small, 200);
  const auto exact = staircase::ehrhart_dominates_exact(big, small);
  EXPECT_TRUE(truncated.holds);
  EXPECT_TRUE(exact.holds);
  EXPECT_TRUE(exact.exhaustive);
  EXPECT_FALSE(truncated.exhaustive);

  const auto reverse = staircase::ehrhart_dominates_exact(small, big);
  EXPECT_FALSE(reverse.holds);
  ASSERT_TRUE(reverse.first_failure.has_value());
  const std::int64_t t = *reverse.first_failure;
  EXPECT_LT(staircase::triangle_count(small, t), staircase::triangle_count(big, t));
  for (std::int64_t s = 1; s < t; ++s) {
    EXPECT_GE(staircase::triangle_count(small, s), staircase::triangle_count(big, s));
  }
}

TEST(EmbeddingDecision, NormalizesTargetToIntegers) {
  const auto verdict = staircase::embedding_decision(Ellipsoid(q(1), q(2)),
                                                     Ellipsoid(q(3, 2), q(2)), 300);
  EXPECT_EQ(verdict.normalization, q(2));
  EXPECT_EQ(verdict.target_triangle.u(), q(1, 3));
  EXPECT_EQ(verdict.target_triangle.v(), q(1, 4));
  EXPECT_TRUE(verdict.holds());
  EXPECT_TRUE(verdict.truncated);
}

TEST(EmbeddingDecision, AgreesWithCapacityComparison) {
  // After normalization the target capacities are integers, so Ehrhart
  // domination at integer t is the same as c_k(source) <= c_k(target).
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> d(1, 9);
  for (int i = 0; i < 30; ++i) {
    const Ellipsoid source(q(1), q(1) + q(d(rng), d(rng)));
    const Rational lambda = q(d(rng) + 6, 6);
    const Ellipsoid target(lambda, lambda * (q(1) + q(d(rng), d(rng))));
    const auto verdict = staircase::embedding_decision_exact(source, target);
    const std::size_t horizon =
        verdict.holds() ? 400
                        : staircase::triangle_count(verdict.target_triangle,
                                                    *verdict.domination.first_failure)
                                  .get_ui() +
                              1;
    const auto lhs = staircase::capacity_prefix(source, horizon);
    const auto rhs = staircase::capacity_prefix(target, horizon);
    bool termwise = true;
    for (std::size_t k = 0; k < horizon; ++k) {
      termwise = termwise && lhs[k] <= rhs[k];
    }
    EXPECT_EQ(termwise, verdict.holds()) << i;
  }
}
