#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "staircase/ellipsoid.hpp"
#include "staircase/lemmas.hpp"

using oracle::q;
using staircase::DomainError;
using staircase::LemmaVerdict;
using staircase::QuadraticSurd;

TEST(Nicebound, ExcludedPairs) {
  for (const auto& [k, l] : {std::pair{3, 2}, {5, 2}, {4, 3}, {5, 3}, {5, 4}}) {
    EXPECT_TRUE(staircase::nicebound_excluded(k, l));
    EXPECT_EQ(staircase::verify_nicebound(k, l).verdict, LemmaVerdict::excluded);
  }
  EXPECT_EQ(staircase::verify_nicebound(7, 1).verdict, LemmaVerdict::excluded);
  EXPECT_FALSE(staircase::nicebound_excluded(7, 2));
}

TEST(Nicebound, ExcludedPairsReallyFail) {
  // The bound is false or not strict for the excluded non-special pairs.
  for (const auto& [k, l] : {std::pair{5, 2}, {5, 3}, {5, 4}}) {
    const QuadraticSurd a0 = oracle::accumulation_closed_form(k, l);
    EXPECT_GE(a0, QuadraticSurd(q(k + l + 1, l))) << k << "/" << l;
  }
}

TEST(Nicebound, HoldsForAllAdmissiblePairsUpToSixty) {
  int checked = 0;
  for (std::int64_t l = 2; l <= 60; ++l) {
    for (std::int64_t k = l + 1; k <= 60; ++k) {
      if (std::gcd(k, l) != 1 || staircase::nicebound_excluded(k, l)) {
        continue;
      }
      const staircase::BoundCheck check = staircase::verify_nicebound(k, l);
      ASSERT_EQ(check.verdict, LemmaVerdict::pass) << k << "/" << l;
      EXPECT_GT(check.margin.sign(), 0);
      EXPECT_EQ(check.margin, QuadraticSurd(check.bound) - oracle::accumulation_closed_form(k, l));
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(Nicebound, RejectsNonCoprimeOrReversedPairs) {
  EXPECT_THROW((void)staircase::verify_nicebound(6, 4), DomainError);
  EXPECT_THROW((void)staircase::verify_nicebound(2, 5), DomainError);
}

TEST(Exceptional, StragglersAndIntegralFamily) {
  for (const auto& [k, l] : {std::pair{5, 2}, {5, 3}, {5, 4}}) {
    const staircase::BoundCheck check = staircase::verify_exceptional(k, l);
    EXPECT_EQ(check.verdict, LemmaVerdict::pass) << k << "/" << l;
    const std::int64_t f = k / l;
    EXPECT_EQ(check.bound, q(k, l) * q((f + 2) * (f + 2), (f + 1) * (f + 1)));
  }
  for (std::int64_t k = 3; k <= 60; ++k) {
    const staircase::BoundCheck check = staircase::verify_exceptional(k, 1);
    EXPECT_EQ(check.verdict, LemmaVerdict::pass) << k;
    EXPECT_EQ(check.bound, q(k * (k + 3) * (k + 3), (k + 1) * (k + 1)));
  }
  EXPECT_THROW((void)staircase::verify_exceptional(7, 2), DomainError);
  EXPECT_THROW((void)staircase::verify_exceptional(2, 1), DomainError);
}

TEST(ClaimSteps, AllTalliesPass) {
  const staircase::ClaimReport report = staircase::verify_claim_steps(60, 40);
  EXPECT_TRUE(report.passed());
  for (const staircase::ClaimTally& tally : report.claims) {
    EXPECT_TRUE(tally.passed()) << tally.name;
    EXPECT_GT(tally.checked, 0) << tally.name;
  }
  EXPECT_EQ(report.find("leftover-cases").checked, 11);
  EXPECT_THROW((void)report.find("no-such-claim"), std::out_of_range);
}

TEST(ClaimSteps, LeftoverPairsSatisfyTheBoundDirectly) {
  const std::set<std::pair<int, int>> leftovers = {{7, 2}, {7, 3}, {8, 3}, {7, 4},
                                                    {9, 4}, {6, 5}, {7, 5}, {8, 5},
                                                    {9, 5}, {7, 6}, {11, 6}};
  for (const auto& [k, l] : leftovers) {
    const QuadraticSurd a0 = oracle::accumulation_closed_form(k, l);
    EXPECT_LT(a0, QuadraticSurd(q(k + l + 1, l))) << k << "/" << l;
  }
}

TEST(CaseCoverage, ExactlyOneLemmaAppliesToEachNonSpecialPair) {
  const std::set<std::pair<std::int64_t, std::int64_t>> special = {{1, 1}, {2, 1}, {3, 2}, {4, 3}};
  for (std::int64_t l = 1; l <= 40; ++l) {
    for (std::int64_t k = l; k <= 60; ++k) {
      if (std::gcd(k, l) != 1 || special.count({k, l}) != 0) {
        continue;
      }
      int applicable = 0;
      int passing = 0;
      const staircase::BoundCheck nice = staircase::verify_nicebound(k, l);
      if (nice.verdict != LemmaVerdict::excluded) {
        ++applicable;
        passing += nice.verdict == LemmaVerdict::pass ? 1 : 0;
      }
      try {
        const staircase::BoundCheck other = staircase::verify_exceptional(k, l);
        ++applicable;
        passing += other.verdict == LemmaVerdict::pass ? 1 : 0;
      } catch (const DomainError&) {
      }
      EXPECT_EQ(applicable, 1) << k << "/" << l;
      EXPECT_EQ(passing, 1) << k << "/" << l;
    }
  }
}
