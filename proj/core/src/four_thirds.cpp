#include "staircase/four_thirds.hpp"

#include <algorithm>

#include "staircase/ech.hpp"

namespace staircase {

Rational four_thirds_value(const Rational& a) {
  if (a < Rational(2) || Rational(4) < a) {
    throw DomainError("the 4/3 case is verified on [2, 4], got " + a.str());
  }
  if (a <= Rational(3)) {
    return Rational(3) / Rational(2);
  }
  return (a + Rational(3)) / Rational(4);
}

std::vector<Rational> rational_grid(const Rational& lo, const Rational& hi, const Rational& step) {
  if (step.sign() <= 0) {
    throw DomainError("grid step must be positive");
  }
  std::vector<Rational> out;
  for (Rational a = lo; a <= hi; a += step) {
    out.push_back(a);
  }
  return out;
}

bool FourThirdsReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const FourThirdsRow& r) { return r.passed; });
}

FourThirdsReport verify_43_case(std::int64_t t_max, const std::vector<Rational>& a_grid,
                                std::size_t n_cap) {
  const Rational b = Rational(4) / Rational(3);
  CapacitySequence target(Ellipsoid(Rational(1), b));
  const std::size_t witness_count = std::max<std::size_t>(n_cap, 10) + 1;
  target.prefix(witness_count);

  FourThirdsReport report{t_max, n_cap, {}};
  for (const Rational& a : a_grid) {
    const Rational claimed = four_thirds_value(a);
    CapacitySequence source(Ellipsoid(Rational(1), a));
    const Rational ratio_k2 = source.at(2) / target.at(2);
    const Rational ratio_k10 = source.at(10) / target.at(10);
    const Rational bound = capacity_lower_bound(a, target, n_cap);
    const bool lower_matches = max(ratio_k2, ratio_k10) == claimed && bound == claimed;

    EmbeddingVerdict upper = embedding_decision(Ellipsoid(Rational(1), a),
                                                Ellipsoid(claimed, claimed * b), t_max);
    const bool passed = lower_matches && upper.holds();
    report.rows.push_back(
        {a, claimed, ratio_k2, ratio_k10, bound, lower_matches, std::move(upper), passed});
  }
  return report;
}

}  // namespace staircase
