#pragma once

#include <cstdint>
#include <vector>

#include "staircase/ehrhart.hpp"
#include "staircase/rational.hpp"

namespace staircase {

// Claimed value of c_{4/3}(a) on [2, 4]: 3/2 up to a = 3, (a + 3)/4 after.
Rational four_thirds_value(const Rational& a);

// lo, lo + step, ..., up to and including hi when hit exactly.
std::vector<Rational> rational_grid(const Rational& lo, const Rational& hi, const Rational& step);

struct FourThirdsRow {
  Rational a;
  Rational claimed;
  Rational ratio_k2;   // c_2(E(1,a)) / c_2(E(1,4/3))
  Rational ratio_k10;  // c_10(E(1,a)) / c_10(E(1,4/3))
  Rational capacity_bound;
  bool lower_matches = false;
  EmbeddingVerdict upper;
  bool passed = false;
};

struct FourThirdsReport {
  std::int64_t t_max = 0;
  std::size_t n_cap = 0;
  std::vector<FourThirdsRow> rows;

  bool passed() const;
};

// For each grid value a in [2, 4]: the capacity lower bound must equal the
// claimed value (both through the k = 2 / k = 10 witnesses and through the
// full bound with n_cap capacities), and E(1, a) -> claimed * E(1, 4/3)
// must pass the Ehrhart check up to t_max.
FourThirdsReport verify_43_case(std::int64_t t_max, const std::vector<Rational>& a_grid,
                                std::size_t n_cap = 2000);

}  // namespace staircase
