#include "staircase/lemmas.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "staircase/ellipsoid.hpp"

namespace staircase {

namespace {

constexpr std::array<std::pair<std::int64_t, std::int64_t>, 5> kExcluded = {
    {{3, 2}, {5, 2}, {4, 3}, {5, 3}, {5, 4}}};

constexpr std::array<std::pair<std::int64_t, std::int64_t>, 3> kStragglers = {
    {{5, 2}, {5, 3}, {5, 4}}};

Rational q(std::int64_t n) { return Rational(n); }
Rational frac(std::int64_t n, std::int64_t d) { return Rational(n) / Rational(d); }

BoundCheck compare_against(std::int64_t k, std::int64_t l, const Rational& bound,
                           std::string lemma) {
  BoundCheck out;
  out.k = k;
  out.l = l;
  out.lemma = std::move(lemma);
  out.a0 = accumulation_point(k, l).a0;
  out.bound = bound;
  out.margin = QuadraticSurd(bound) - out.a0;
  out.verdict = out.margin.sign() > 0 ? LemmaVerdict::pass : LemmaVerdict::fail;
  return out;
}

bool is_straggler(std::int64_t k, std::int64_t l) {
  return std::find(kStragglers.begin(), kStragglers.end(), std::pair{k, l}) != kStragglers.end();
}

// Region where the two quadratic-gap claims feed the relaxed root bound.
bool in_gap_region(std::int64_t k, std::int64_t l) {
  return (l >= 7 && k > l) || (l >= 3 && k >= l + 6);
}

bool in_l2_region(std::int64_t k, std::int64_t l) { return l == 2 && k >= 8; }

}  // namespace

const char* to_string(LemmaVerdict verdict) {
  switch (verdict) {
    case LemmaVerdict::pass:
      return "pass";
    case LemmaVerdict::fail:
      return "fail";
    case LemmaVerdict::excluded:
      return "excluded";
  }
  return "unknown";
}

bool nicebound_excluded(std::int64_t k, std::int64_t l) {
  return std::find(kExcluded.begin(), kExcluded.end(), std::pair{k, l}) != kExcluded.end();
}

BoundCheck verify_nicebound(std::int64_t k, std::int64_t l) {
  const AccumulationData acc = accumulation_point(k, l);  // validates k, l
  const Rational bound = frac(k + l + 1, l);
  if (l == 1 || nicebound_excluded(k, l)) {
    BoundCheck out;
    out.k = k;
    out.l = l;
    out.lemma = "nicebound";
    out.a0 = acc.a0;
    out.bound = bound;
    out.margin = QuadraticSurd(bound) - acc.a0;
    out.verdict = LemmaVerdict::excluded;
    return out;
  }
  return compare_against(k, l, bound, "nicebound");
}

BoundCheck verify_exceptional(std::int64_t k, std::int64_t l) {
  if (is_straggler(k, l)) {
    const Rational b = frac(k, l);
    const Rational f1(Integer(b.floor() + 1));
    const Rational f2(Integer(b.floor() + 2));
    return compare_against(k, l, b * f2 * f2 / (f1 * f1), "exceptional");
  }
  if (l == 1 && k >= 3) {
    const Rational kk = q(k);
    const Rational bound = kk * (kk + q(3)) * (kk + q(3)) / ((kk + q(1)) * (kk + q(1)));
    return compare_against(k, l, bound, "integral");
  }
  throw DomainError("exceptional bound applies to (5,2), (5,3), (5,4) or l = 1, k >= 3; got (" +
                    std::to_string(k) + ", " + std::to_string(l) + ")");
}

bool ClaimReport::passed() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimTally& c) { return c.passed(); });
}

const ClaimTally& ClaimReport::find(const std::string& name) const {
  const auto it = std::find_if(claims.begin(), claims.end(),
                               [&](const ClaimTally& c) { return c.name == name; });
  if (it == claims.end()) {
    throw std::out_of_range("no claim named " + name);
  }
  return *it;
}

ClaimReport verify_claim_steps(std::int64_t k_max, std::int64_t l_max) {
  if (k_max < 1 || l_max < 1) {
    throw DomainError("claim ranges must be positive");
  }
  ClaimTally gap{"quadratic-gap", "l >= 7, k > l", 0, 0, {}};
  ClaimTally gap_wide{"quadratic-gap-wide", "l >= 3, k >= l + 6", 0, 0, {}};
  ClaimTally reduction{"gap-reduction", "all k > l", 0, 0, {}};
  ClaimTally relaxed{"relaxed-root-bound", "coprime, l >= 7 and k > l, or l >= 3 and k >= l + 6",
                     0, 0, {}};
  ClaimTally l2_disc{"l2-discriminant", "l = 2, k >= 6", 0, 0, {}};
  ClaimTally l2_final{"l2-final", "l = 2, k >= 8", 0, 0, {}};
  ClaimTally int_disc{"integral-discriminant", "l = 1, k >= 4", 0, 0, {}};
  ClaimTally int_ratio{"integral-ratio", "l = 1, k >= 2", 0, 0, {}};
  ClaimTally leftover{"leftover-cases", "coprime pairs outside the covered regions", 0, 0, {}};
  ClaimTally coverage{"coverage", "coprime k > l >= 2, not excluded", 0, 0, {}};

  auto record = [](ClaimTally& tally, bool ok, std::int64_t k, std::int64_t l) {
    ++tally.checked;
    if (!ok) {
      tally.failures.emplace_back(k, l);
    }
  };

  for (std::int64_t l = 1; l <= l_max; ++l) {
    for (std::int64_t k = 1; k <= k_max; ++k) {
      const Rational kq = q(k);
      const Rational lq = q(l);
      const Rational gap_lhs = (kq + lq + q(1)) * (kq + lq + q(1)) - q(4) * kq * lq;
      const Rational shifted = kq - lq / q(4) - frac(2, 5);
      const Rational gap_rhs = shifted * shifted;

      if (k > l) {
        const Rational reduced = frac(15, 16) * lq * lq - kq * (frac(3, 2) * lq - frac(14, 5)) +
                                 frac(9, 5) * lq + frac(21, 25);
        record(reduction, gap_lhs - gap_rhs == reduced, k, l);
      }

      if (l >= 7) {
        if (k > l) {
          record(gap, gap_lhs <= gap_rhs, k, l);
        } else {
          ++gap.skipped;
        }
      }
      if (l >= 3) {
        if (k >= l + 6) {
          record(gap_wide, gap_lhs <= gap_rhs, k, l);
        } else {
          ++gap_wide.skipped;
        }
      }

      if (l == 2 && k >= 6) {
        record(l2_disc, kq * kq - q(2) * kq + q(9) < (kq - frac(1, 4)) * (kq - frac(1, 4)), k, l);
      }
      if (l == 2 && k >= 8) {
        record(l2_final, kq + frac(11, 4) + frac(121, 64) / kq <= kq + q(3), k, l);
      }
      if (l == 1 && k >= 4) {
        record(int_disc,
               (kq + q(2)) * (kq + q(2)) - q(4) * kq < (kq + frac(1, 2)) * (kq + frac(1, 2)), k,
               l);
      }
      if (l == 1 && k >= 2) {
        record(int_ratio, (kq + frac(5, 4)) / kq < (kq + q(3)) / (kq + q(1)), k, l);
      }

      if (std::gcd(k, l) != 1 || k <= l) {
        continue;
      }
      if (in_gap_region(k, l)) {
        const Rational top = q(2) * kq + frac(3, 4) * lq + frac(3, 5);
        const Rational relaxed_bound = top * top / (q(4) * kq * lq);
        const QuadraticSurd a0 = accumulation_point(k, l).a0;
        record(relaxed,
               a0 <= QuadraticSurd(relaxed_bound) && relaxed_bound <= frac(k + l + 1, l), k, l);
      }
      if (l >= 2 && !nicebound_excluded(k, l)) {
        const bool covered = in_gap_region(k, l) || in_l2_region(k, l);
        if (!covered) {
          record(leftover, verify_nicebound(k, l).verdict == LemmaVerdict::pass, k, l);
        }
        // Only finitely many pairs can be left over: l <= 6 and k < l + 6,
        // or l = 2 and k < 8.
        const bool finite_leftover = (l <= 6 && k < l + 6) || (l == 2 && k < 8);
        record(coverage, covered || finite_leftover, k, l);
      }
    }
  }
  return {{gap, gap_wide, reduction, relaxed, l2_disc, l2_final, int_disc, int_ratio, leftover,
           coverage}};
}

}  // namespace staircase
