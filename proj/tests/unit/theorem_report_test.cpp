#include <numeric>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "staircase/theorem_report.hpp"

using oracle::q;
using staircase::QuadraticSurd;
using staircase::TheoremCase;
using staircase::TheoremReport;

namespace {

staircase::TheoremReportOptions quick() {
  staircase::TheoremReportOptions options;
  options.n_cap = 300;
  options.scan_step = q(1, 12);
  return options;
}

const staircase::CheckResult* find_check(const TheoremReport& report, const std::string& name) {
  for (const staircase::CheckResult& check : report.checks) {
    if (check.name == name) {
      return &check;
    }
  }
  return nullptr;
}

}  // namespace

TEST(ScanEmbeddingFunction, SinglePointBall) {
  const auto rows = staircase::scan_embedding_function(q(1), q(1), q(1), q(1), 10);
  ASSERT_EQ(rows.size(), 1U);
  EXPECT_EQ(rows[0].volume, QuadraticSurd(q(1)));
  EXPECT_EQ(rows[0].bullet, q(1));
  EXPECT_EQ(rows[0].capacity, q(1));
}

TEST(ScanEmbeddingFunction, FourThirdsRows) {
  const auto rows = staircase::scan_embedding_function(q(4, 3), q(2), q(4), q(1, 20), 200);
  ASSERT_EQ(rows.size(), 41U);
  for (const staircase::ScanRow& row : rows) {
    EXPECT_EQ(row.capacity, row.a <= q(3) ? q(3, 2) : (row.a + q(3)) / q(4)) << row.a.str();
    EXPECT_EQ(row.volume * row.volume, QuadraticSurd(row.a * q(3, 4)));
  }
}

TEST(ScanEmbeddingFunction, CapacityDominatesBulletsForFive) {
  const auto rows = staircase::scan_embedding_function(q(5), q(1), q(12), q(1, 10), 500);
  EXPECT_EQ(rows.size(), 111U);
  for (const staircase::ScanRow& row : rows) {
    if (row.bullet) {
      EXPECT_GE(row.capacity, *row.bullet) << row.a.str();
    }
  }
}

TEST(TheoremReport, BallIsFlaggedSpecial) {
  const TheoremReport report = staircase::theorem_report(1, 1, quick());
  EXPECT_TRUE(report.special);
  EXPECT_EQ(report.kind, TheoremCase::staircase);
  EXPECT_EQ(report.accumulation.a0, QuadraticSurd(q(7, 2), q(3, 2), staircase::Integer(5)));
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(find_check(report, "bound-lemma"), nullptr);
  ASSERT_FALSE(report.scan.empty());
  EXPECT_EQ(report.scan.front().a, q(1));
  EXPECT_LE(QuadraticSurd(report.scan.back().a), report.accumulation.a0 + QuadraticSurd(q(1)));
}

TEST(TheoremReport, FourThirdsDelegatesToItsOwnCheck) {
  const TheoremReport report = staircase::theorem_report(4, 3, quick());
  EXPECT_TRUE(report.special);
  EXPECT_EQ(report.kind, TheoremCase::four_thirds);
  EXPECT_NE(find_check(report, "four-thirds-case"), nullptr);
  EXPECT_TRUE(report.passed());
}

TEST(TheoremReport, IntegralFivePassesEveryCheck) {
  const TheoremReport report = staircase::theorem_report(5, 1);
  EXPECT_FALSE(report.special);
  EXPECT_EQ(report.kind, TheoremCase::integral);
  for (const staircase::CheckResult& check : report.checks) {
    EXPECT_TRUE(check.passed) << check.name << ": " << check.witness;
  }
  std::vector<int> indices;
  for (const staircase::BulletBound& bullet : report.governing_bullets) {
    indices.push_back(bullet.index);
  }
  EXPECT_EQ(indices, std::vector<int>({1, 2, 3, 6, 7}));
}

TEST(TheoremReport, ClassifiesCases) {
  EXPECT_EQ(staircase::theorem_report(2, 1, quick()).kind, TheoremCase::staircase);
  EXPECT_EQ(staircase::theorem_report(3, 2, quick()).kind, TheoremCase::staircase);
  EXPECT_EQ(staircase::theorem_report(5, 3, quick()).kind, TheoremCase::exceptional);
  EXPECT_EQ(staircase::theorem_report(7, 2, quick()).kind, TheoremCase::nicebound);
  EXPECT_EQ(staircase::theorem_report(9, 1, quick()).kind, TheoremCase::integral);
  EXPECT_THROW((void)staircase::theorem_report(4, 2, quick()), staircase::DomainError);
}

TEST(TheoremReport, EveryNonSpecialPairPasses) {
  for (std::int64_t l = 1; l <= 8; ++l) {
    for (std::int64_t k = l; k <= 16; ++k) {
      if (std::gcd(k, l) != 1) {
        continue;
      }
      const TheoremReport report = staircase::theorem_report(k, l, quick());
      for (const staircase::CheckResult& check : report.checks) {
        EXPECT_TRUE(check.passed) << k << "/" << l << " " << check.name << ": " << check.witness;
      }
    }
  }
}

TEST(TheoremReport, RationalAccumulationPointsAreExcludedAtTouchPoints) {
  // (k+l+1)^2 - 4kl is a perfect square, e.g. (8,5), (12,7): a0 is rational
  // and lands on an admissible touch point instead of above the volume curve.
  staircase::TheoremReportOptions options;
  options.n_cap = 60;
  options.scan_step = q(1, 2);
  int seen = 0;
  for (std::int64_t l = 2; l <= 40; ++l) {
    for (std::int64_t k = l + 1; k <= 60; ++k) {
      const std::int64_t s = k + l + 1;
      const mpz_class disc = s * s - 4 * k * l;
      if (std::gcd(k, l) != 1 || !mpz_perfect_square_p(disc.get_mpz_t()) ||
          (k == 4 && l == 3)) {
        continue;
      }
      ++seen;
      const TheoremReport report = staircase::theorem_report(k, l, options);
      ASSERT_TRUE(report.accumulation.a0.is_rational());
      const staircase::CheckResult* check = find_check(report, "a0-excluded");
      ASSERT_NE(check, nullptr);
      EXPECT_TRUE(check->passed) << k << "/" << l << ": " << check->witness;
      EXPECT_TRUE(report.passed()) << k << "/" << l;
    }
  }
  EXPECT_EQ(seen, 26);
}
