#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "staircase/bullets.hpp"
#include "staircase/check.hpp"
#include "staircase/ellipsoid.hpp"
#include "staircase/rational.hpp"

namespace staircase {

// One grid point of the embedding-function picture for fixed b.
struct ScanRow {
  Rational a;
  QuadraticSurd volume;  // sqrt(a/b)
  std::optional<Rational> bullet;
  Rational capacity;  // capacity_lower_bound with n_cap capacities
};

// Rows for a = a_lo, a_lo + step, ... <= a_hi. Requires 1 <= a_lo <= a_hi,
// step > 0.
std::vector<ScanRow> scan_embedding_function(const Rational& b, const Rational& a_lo,
                                             const Rational& a_hi, const Rational& step,
                                             std::size_t n_cap);

enum class TheoremCase {
  staircase,    // b in {1, 2, 3/2}
  four_thirds,  // b = 4/3
  nicebound,    // a0 < (k + l + 1)/l
  exceptional,  // (5,2), (5,3), (5,4)
  integral,     // l = 1, k >= 3
};

const char* to_string(TheoremCase kind);

struct TheoremReport {
  std::int64_t k = 0;
  std::int64_t l = 0;
  Rational b;
  bool special = false;
  TheoremCase kind = TheoremCase::nicebound;
  AccumulationData accumulation;
  std::vector<BulletBound> governing_bullets;
  std::vector<CheckResult> checks;
  std::vector<ScanRow> scan;

  bool passed() const;
};

struct TheoremReportOptions {
  std::int64_t t_max = 300;
  std::size_t n_cap = 2000;
  Rational scan_step = Rational(1) / Rational(60);
};

// Assembles the finite computations behind the finiteness argument for b = k/l:
// the accumulation point, the bound lemma that applies, coverage of [1, a0]
// by the governing bullets, a certificate that c_b(a0) cannot equal the
// volume bound without c_b being locally linear there, and a scan of
// bullet/capacity/volume bounds over [1, a0 + 1] with monotonicity and
// subscaling checks on the capacity bound. Special values of b are flagged;
// b = 4/3 runs the dedicated check instead.
TheoremReport theorem_report(std::int64_t k, std::int64_t l,
                             const TheoremReportOptions& options = {});

}  // namespace staircase
