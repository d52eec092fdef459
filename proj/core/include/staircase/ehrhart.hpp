#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "staircase/ellipsoid.hpp"
#include "staircase/rational.hpp"

namespace staircase {

// Signals an internal consistency failure, e.g. a fitted quasi-polynomial
// that disagrees with direct lattice counts.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Triangle with vertices (0,0), (u,0), (0,v).
class RightTriangle {
 public:
  RightTriangle(const Rational& u, const Rational& v);

  const Rational& u() const { return u_; }
  const Rational& v() const { return v_; }

  // Lattice-triangle legs of the ellipsoid E(a, b): T_{1/a, 1/b}, whose
  // t-dilate counts {(m, n) : m a + n b <= t}.
  static RightTriangle reciprocal_legs(const Ellipsoid& ellipsoid);

 private:
  Rational u_;
  Rational v_;
};

// #{(x, y) in Z^2 : x, y >= 0, x/(t u) + y/(t v) <= 1}, summed row by row.
// t = 0 gives 1.
Integer triangle_count(const RightTriangle& triangle, std::int64_t t);

// Degree-2 quasi-polynomial A t^2 + B_r t + C_r with r = t mod period.
class QuasiPolynomial {
 public:
  QuasiPolynomial(std::int64_t period, Rational leading, std::vector<Rational> linear,
                  std::vector<Rational> constant);

  std::int64_t period() const { return period_; }
  const Rational& leading() const { return leading_; }
  const std::vector<Rational>& linear() const { return linear_; }
  const std::vector<Rational>& constant() const { return constant_; }

  Rational operator()(std::int64_t t) const;

 private:
  std::int64_t period_;
  Rational leading_;
  std::vector<Rational> linear_;
  std::vector<Rational> constant_;
};

// Ehrhart quasi-polynomial of a rational right triangle. The period is the
// lcm of the leg denominators and the leading coefficient the area uv/2;
// B_r and C_r come from the counts at r and r + period, and the result is
// checked against the counts at r + 2 period and r + 3 period (throws
// InternalError on mismatch).
QuasiPolynomial fit_quasi_polynomial(const RightTriangle& triangle);

struct DominationVerdict {
  bool holds = true;
  std::optional<std::int64_t> first_failure;
  // Verdict covers t = 1..checked_up_to; when exhaustive it covers all t.
  std::int64_t checked_up_to = 0;
  bool exhaustive = false;
  // Smallest observed L_lhs(t) - L_rhs(t) over the checked range.
  Integer min_margin;
  std::int64_t min_margin_at = 0;
};

// L_lhs(t) >= L_rhs(t) for t = 1..t_max.
DominationVerdict ehrhart_dominates(const RightTriangle& lhs, const RightTriangle& rhs,
                                    std::int64_t t_max);

// Decides L_lhs(t) >= L_rhs(t) for every t >= 1 by comparing the fitted
// quasi-polynomials residue by residue: past a Cauchy root bound each class
// has the sign of its leading difference, and the finite prefix is scanned.
// Throws DomainError when that prefix exceeds scan_limit.
DominationVerdict ehrhart_dominates_exact(const RightTriangle& lhs, const RightTriangle& rhs,
                                          std::int64_t scan_limit = 50'000'000);

struct EmbeddingVerdict {
  DominationVerdict domination;
  // Both ellipsoids are multiplied by this factor so the target becomes
  // E(p, q) with coprime integers p, q.
  Rational normalization;
  RightTriangle source_triangle;
  RightTriangle target_triangle;
  bool truncated = true;

  bool holds() const { return domination.holds; }
};

// Ellipsoid embedding test source -> target through Ehrhart domination of
// the reciprocal-leg triangles. Normalizing the target to integral
// parameters makes the integer-t check equivalent to ECH capacity
// domination. Checks t = 1..t_max only and reports itself truncated.
EmbeddingVerdict embedding_decision(const Ellipsoid& source, const Ellipsoid& target,
                                    std::int64_t t_max);

// Untruncated variant built on ehrhart_dominates_exact.
EmbeddingVerdict embedding_decision_exact(const Ellipsoid& source, const Ellipsoid& target);

}  // namespace staircase
