#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "staircase/quadratic_surd.hpp"
#include "staircase/rational.hpp"

namespace staircase {

enum class LemmaVerdict { pass, fail, excluded };

const char* to_string(LemmaVerdict verdict);

// Exact comparison a0(k, l) < bound.
struct BoundCheck {
  std::int64_t k = 0;
  std::int64_t l = 0;
  LemmaVerdict verdict = LemmaVerdict::excluded;
  std::string lemma;
  QuadraticSurd a0;
  Rational bound;
  QuadraticSurd margin;  // bound - a0, positive on pass
};

// (k, l) pairs excluded from the generic bound a0 < (k + l + 1)/l.
bool nicebound_excluded(std::int64_t k, std::int64_t l);

// a0 < (k + l + 1)/l for coprime k > l >= 2 outside the excluded list.
// Excluded pairs (and l = 1) are reported as LemmaVerdict::excluded; non-coprime
// or k < l throws DomainError.
BoundCheck verify_nicebound(std::int64_t k, std::int64_t l);

// a0 < b (floor(b) + 2)^2 / (floor(b) + 1)^2 for (5,2), (5,3), (5,4), and
// a0 < k (k + 3)^2 / (k + 1)^2 for l = 1, k >= 3. Other inputs throw
// DomainError.
BoundCheck verify_exceptional(std::int64_t k, std::int64_t l);

// Tally of one exhaustively checked inequality.
struct ClaimTally {
  std::string name;
  std::string hypothesis;
  std::int64_t checked = 0;
  std::int64_t skipped = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> failures;  // (k, l)

  bool passed() const { return failures.empty(); }
};

struct ClaimReport {
  std::vector<ClaimTally> claims;

  bool passed() const;
  const ClaimTally& find(const std::string& name) const;
};

// Exhaustively checks the auxiliary inequalities behind the accumulation
// point bounds over k <= k_max, l <= l_max, in exact arithmetic:
//   quadratic-gap        (k+l+1)^2 - 4kl <= (k - l/4 - 2/5)^2, l >= 7, k > l
//   quadratic-gap-wide   same inequality, l >= 3, k >= l + 6
//   gap-reduction        the gap equals 15/16 l^2 - k(3/2 l - 14/5) + 9/5 l + 21/25
//   relaxed-root-bound   a0 <= (2k + 3l/4 + 3/5)^2/(4kl) <= (k+l+1)/l on the
//                        region of the two gap claims
//   l2-discriminant      k^2 - 2k + 9 < (k - 1/4)^2 for l = 2, k >= 6
//   l2-final             k + 11/4 + 121/(64k) <= k + 3 for l = 2, k >= 8
//   integral-discriminant (k+2)^2 - 4k < (k + 1/2)^2 for k >= 4
//   integral-ratio       (k + 5/4)/k < (k+3)/(k+1) for k >= 2
//   leftover-cases       the finitely many coprime pairs not covered above
//   coverage             every admissible coprime pair falls in some case
ClaimReport verify_claim_steps(std::int64_t k_max, std::int64_t l_max);

}  // namespace staircase
