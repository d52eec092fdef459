#include "suites.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "staircase/ech.hpp"
#include "staircase/ehrhart.hpp"
#include "staircase/ellipsoid.hpp"
#include "staircase/four_thirds.hpp"
#include "staircase/lemmas.hpp"
#include "staircase/regions.hpp"

namespace staircase::cli {

namespace {

Rational frac(std::int64_t n, std::int64_t d) { return Rational(n) / Rational(d); }

std::string join(const std::vector<Rational>& values) {
  std::string out;
  for (const Rational& v : values) {
    out += (out.empty() ? "" : ", ") + v.str();
  }
  return out;
}

std::vector<CheckResult> weights_suite() {
  std::int64_t checked = 0;
  std::string failure;
  for (std::int64_t q = 1; q <= 200 && failure.empty(); ++q) {
    for (std::int64_t p = q; p <= 200; ++p) {
      if (std::gcd(p, q) != 1) {
        continue;
      }
      const Rational b = frac(p, q);
      const std::vector<Rational> w = weight_sequence(b);
      Rational sum;
      Rational squares;
      for (const Rational& x : w) {
        sum += x;
        squares += x * x;
      }
      ++checked;
      if (squares != b || sum != b + Rational(1) - frac(1, q)) {
        failure = b.str();
        break;
      }
    }
  }
  return {{"weight-identities", "sum w_i^2 = p/q and sum w_i = p/q + 1 - 1/q for p, q <= 200",
           failure.empty(),
           failure.empty() ? std::to_string(checked) + " coprime pairs" : "fails at " + failure}};
}

std::vector<CheckResult> capacities_suite(std::uint64_t seed) {
  std::vector<CheckResult> out;

  const Ellipsoid four_thirds(Rational(1), frac(4, 3));
  const Rational c10 = capacity(four_thirds, 10);
  const Rational c2 = capacity(four_thirds, 2);
  out.push_back({"capacity-spot-values", "c_10(E(1,4/3)) = 4 and c_2(E(1,4/3)) = 4/3",
                 c10 == Rational(4) && c2 == frac(4, 3), "c_10 = " + c10.str() + ", c_2 = " + c2.str()});

  const std::vector<std::pair<Rational, Rational>> shapes = {
      {Rational(1), Rational(1)}, {Rational(1), Rational(2)},  {Rational(1), frac(4, 3)},
      {Rational(2), Rational(3)}, {frac(3, 2), frac(5, 2)},    {Rational(1), frac(7, 5)},
      {frac(5, 3), Rational(2)},  {Rational(1), frac(13, 4)},  {frac(2, 7), frac(9, 11)}};
  std::string mismatch;
  for (const auto& [a, b] : shapes) {
    if (capacity_prefix(Ellipsoid(a, b), 501) != brute_force_capacities(a, b, 501)) {
      mismatch = "E(" + a.str() + ", " + b.str() + ")";
      break;
    }
  }
  out.push_back({"capacity-oracle", "heap enumeration equals sorted sum set for k <= 500",
                 mismatch.empty(),
                 mismatch.empty() ? std::to_string(shapes.size()) + " ellipsoids" : mismatch});

  // Ehrhart domination after normalization versus termwise capacity
  // comparison, on seeded random pairs.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> small(1, 9);
  std::size_t agree = 0;
  std::string disagreement;
  for (int i = 0; i < 30; ++i) {
    const Rational a = Rational(1) + frac(small(rng), small(rng));
    const Rational b = Rational(1) + frac(small(rng), small(rng));
    const Rational lambda = frac(small(rng) + 6, 6);
    const Ellipsoid source(Rational(1), a);
    const Ellipsoid target(lambda, lambda * b);
    const EmbeddingVerdict exact = embedding_decision_exact(source, target);
    const Ellipsoid src = source.scaled(exact.normalization);
    const Ellipsoid tgt = target.scaled(exact.normalization);
    std::size_t horizon = 500;
    if (!exact.holds()) {
      const Integer count = triangle_count(exact.target_triangle, *exact.domination.first_failure);
      horizon = static_cast<std::size_t>(count.get_ui()) + 1;
    }
    const std::vector<Rational> lhs = capacity_prefix(src, horizon);
    const std::vector<Rational> rhs = capacity_prefix(tgt, horizon);
    bool capacities_hold = true;
    for (std::size_t k = 0; k < horizon; ++k) {
      capacities_hold = capacities_hold && lhs[k] <= rhs[k];
    }
    if (capacities_hold == exact.holds()) {
      ++agree;
    } else if (disagreement.empty()) {
      disagreement = "E(1," + a.str() + ") -> E(" + lambda.str() + "," + (lambda * b).str() + ")";
    }
  }
  out.push_back({"capacity-ehrhart-agreement",
                 "exact Ehrhart domination matches termwise capacity comparison",
                 disagreement.empty(),
                 disagreement.empty() ? std::to_string(agree) + " pairs" : disagreement});
  return out;
}

std::vector<CheckResult> ehrhart_tables_suite() {
  const std::vector<Rational> expected_c = {Rational(1), frac(5, 8), Rational(1),
                                            frac(5, 8),  frac(2, 3), frac(7, 24)};
  const std::vector<Rational> expected_c_prime = {Rational(1), frac(5, 8), frac(1, 6), frac(5, 8),
                                                  Rational(1), frac(7, 24), frac(1, 2), frac(5, 8),
                                                  frac(2, 3),  frac(5, 8), frac(1, 2), frac(7, 24)};
  const QuasiPolynomial c = fit_quasi_polynomial(RightTriangle(frac(1, 2), frac(1, 6)));
  const QuasiPolynomial c_prime = fit_quasi_polynomial(RightTriangle(frac(1, 3), frac(1, 4)));
  return {{"ehrhart-constants-T(1/2,1/6)", "constant terms C_0..C_5",
           c.constant() == expected_c, join(c.constant())},
          {"ehrhart-constants-T(1/3,1/4)", "constant terms C'_0..C'_11",
           c_prime.constant() == expected_c_prime, join(c_prime.constant())}};
}

std::vector<CheckResult> diff_suite() {
  const DiffReport report = verify_diff_identity(1000);
  std::string witness = "t <= 1000";
  if (!report.passed()) {
    const DiffViolation& v = report.violations.front();
    witness = "t = " + std::to_string(v.t) + ": expected " + v.expected.get_str() + ", got " +
              v.actual.get_str();
  }
  return {{"diff-identity", "L_T(1/2,1/6) - L_T(1/3,1/4) = d, minus 1 when t = 4 mod 12",
           report.passed(), witness}};
}

std::vector<CheckResult> slices_suite(const SuiteOptions& options) {
  const std::vector<Real> samples = sample_slice_parameters(options.seed, options.slice_samples);
  std::string region_failure;
  std::string slice_failure;
  std::size_t slice_checks = 0;
  for (const Real& a : samples) {
    for (std::int64_t t = 1; t <= options.t_max; ++t) {
      const SliceCounts counts = region_counts(a, t);
      const Integer cap = (t % 12 == 4) ? counts.lower - 1 : counts.lower;
      if (counts.upper > cap && region_failure.empty()) {
        region_failure = "a = " + a.str() + ", t = " + std::to_string(t) +
                         ": U = " + counts.upper.get_str() + ", D = " + counts.lower.get_str();
      }
      const SliceReport slices = verify_slice_inequality(a, t);
      slice_checks += slices.slices.size();
      if (!slices.passed() && slice_failure.empty()) {
        slice_failure = "a = " + a.str() + ", t = " + std::to_string(t);
      }
    }
  }
  const std::string scope = std::to_string(samples.size()) + " values of a, t <= " +
                            std::to_string(options.t_max);
  return {{"region-inequality", "U <= D, and U <= D - 1 when t = 4 mod 12",
           region_failure.empty(), region_failure.empty() ? scope : region_failure},
          {"slice-inequality", "each paired slice of U fits in its partner slice of D",
           slice_failure.empty(),
           slice_failure.empty() ? scope + ", " + std::to_string(slice_checks) + " slices"
                                 : slice_failure}};
}

std::vector<CheckResult> lemmas_suite() {
  std::vector<CheckResult> out;
  std::int64_t nice = 0;
  std::string nice_failure;
  std::int64_t integral = 0;
  std::string integral_failure;
  for (std::int64_t l = 1; l <= 60; ++l) {
    for (std::int64_t k = std::max<std::int64_t>(l + 1, 3); k <= 60; ++k) {
      if (std::gcd(k, l) != 1) {
        continue;
      }
      if (l == 1) {
        ++integral;
        if (verify_exceptional(k, l).verdict != LemmaVerdict::pass && integral_failure.empty()) {
          integral_failure = "(" + std::to_string(k) + ", 1)";
        }
      } else if (!nicebound_excluded(k, l)) {
        ++nice;
        if (verify_nicebound(k, l).verdict != LemmaVerdict::pass && nice_failure.empty()) {
          nice_failure = "(" + std::to_string(k) + ", " + std::to_string(l) + ")";
        }
      }
    }
  }
  out.push_back({"nicebound", "a0 < (k+l+1)/l for coprime k > l >= 2, k <= 60, not excluded",
                 nice_failure.empty(),
                 nice_failure.empty() ? std::to_string(nice) + " pairs" : nice_failure});
  for (const auto& [k, l] : {std::pair{5, 2}, std::pair{5, 3}, std::pair{5, 4}}) {
    const BoundCheck check = verify_exceptional(k, l);
    out.push_back({"exceptional-(" + std::to_string(k) + "," + std::to_string(l) + ")",
                   "a0 < b (floor(b)+2)^2 / (floor(b)+1)^2", check.verdict == LemmaVerdict::pass,
                   "margin " + check.margin.str()});
  }
  out.push_back({"integral", "a0 < k (k+3)^2 / (k+1)^2 for 3 <= k <= 60",
                 integral_failure.empty(),
                 integral_failure.empty() ? std::to_string(integral) + " values" : integral_failure});

  const ClaimReport claims = verify_claim_steps(60, 40);
  for (const ClaimTally& tally : claims.claims) {
    std::string witness = std::to_string(tally.checked) + " checked";
    if (!tally.passed()) {
      const auto& [k, l] = tally.failures.front();
      witness = "fails at (" + std::to_string(k) + ", " + std::to_string(l) + ")";
    }
    out.push_back({"claim-" + tally.name, tally.hypothesis, tally.passed(), witness});
  }
  return out;
}

std::vector<CheckResult> four_thirds_suite(const SuiteOptions& options) {
  const FourThirdsReport report =
      verify_43_case(options.t_max, rational_grid(Rational(2), Rational(4), frac(1, 20)),
                     options.n_cap);
  std::string witness = std::to_string(report.rows.size()) + " grid points, t_max " +
                        std::to_string(options.t_max);
  for (const FourThirdsRow& row : report.rows) {
    if (!row.passed) {
      witness = "a = " + row.a.str() + ": claimed " + row.claimed.str() + ", capacity bound " +
                row.capacity_bound.str() + (row.upper.holds() ? "" : ", upper side fails");
      break;
    }
  }
  return {{"four-thirds", "c(a) = 3/2 on [2,3] and (a+3)/4 on [3,4] from both sides",
           report.passed(), witness}};
}

std::vector<CheckResult> accumulation_suite() {
  const AccumulationData golden = accumulation_point(1, 1);
  const QuadraticSurd expected(frac(7, 2), frac(3, 2), Integer(5));
  std::vector<CheckResult> out = {
      {"accumulation-(1,1)", "a0(1,1) = (7+3√5)/2", golden.a0 == expected, golden.a0.str()}};

  std::int64_t checked = 0;
  std::string failure;
  for (std::int64_t l = 1; l <= 40; ++l) {
    for (std::int64_t k = l; k <= 60; ++k) {
      if (std::gcd(k, l) != 1) {
        continue;
      }
      const AccumulationData acc = accumulation_point(k, l);
      const QuadraticSurd c(acc.per * acc.per / acc.vol - Rational(2));
      const QuadraticSurd residue = acc.a0 * acc.a0 - c * acc.a0 + QuadraticSurd(Rational(1));
      ++checked;
      if (residue.sign() != 0 && failure.empty()) {
        failure = "(" + std::to_string(k) + ", " + std::to_string(l) + ")";
      }
    }
  }
  out.push_back({"accumulation-equation", "a0^2 - (per^2/vol - 2) a0 + 1 = 0 exactly",
                 failure.empty(), failure.empty() ? std::to_string(checked) + " pairs" : failure});
  return out;
}

const std::vector<std::pair<std::string, std::function<std::vector<CheckResult>(const SuiteOptions&)>>>&
registry() {
  static const std::vector<
      std::pair<std::string, std::function<std::vector<CheckResult>(const SuiteOptions&)>>>
      suites = {
          {"weights", [](const SuiteOptions&) { return weights_suite(); }},
          {"capacities", [](const SuiteOptions& o) { return capacities_suite(o.seed); }},
          {"ehrhart-tables", [](const SuiteOptions&) { return ehrhart_tables_suite(); }},
          {"diff", [](const SuiteOptions&) { return diff_suite(); }},
          {"slices", slices_suite},
          {"lemmas", [](const SuiteOptions&) { return lemmas_suite(); }},
          {"43", four_thirds_suite},
          {"accumulation", [](const SuiteOptions&) { return accumulation_suite(); }},
      };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : registry()) {
      out.push_back(entry.first);
    }
    return out;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  return name == "all" || std::ranges::find(suite_names(), name) != suite_names().end();
}

std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& options) {
  std::vector<CheckResult> out;
  for (const auto& [suite, body] : registry()) {
    if (name == "all" || name == suite) {
      std::vector<CheckResult> part = body(options);
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  return out;
}

std::vector<Real> sample_slice_parameters(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> digits(1, 999'999'999);
  std::uniform_int_distribution<int> kind(0, 3);
  std::vector<Real> out;
  out.reserve(count);
  while (out.size() < count) {
    switch (kind(rng)) {
      case 0: {
        // 3 + n/d with a large denominator.
        const Integer den = Integer(digits(rng)) * Integer(digits(rng)) + 1;
        const Integer num = Integer(digits(rng)) * Integer(digits(rng)) % den + 1;
        out.emplace_back(Rational(3) + Rational(num, den));
        break;
      }
      case 1: {
        // 3 + sqrt(d)/m with d not a square and m > sqrt(d).
        const long d = std::uniform_int_distribution<long>(2, 500)(rng);
        const QuadraticSurd root = QuadraticSurd::sqrt(Rational(d));
        if (root.is_rational()) {
          break;
        }
        const long m = static_cast<long>(root.to_double()) + 1 +
                       std::uniform_int_distribution<long>(0, 40)(rng);
        out.emplace_back(QuadraticSurd(Rational(3)) + root / QuadraticSurd(Rational(m)));
        break;
      }
      case 2: {
        // 3 + s pi with 0 < s < 1/pi.
        const Rational s(Integer(std::uniform_int_distribution<long>(1, 317)(rng)), Integer(1000));
        out.push_back(Real::affine(Rational(3), s, Real::Constant::pi));
        break;
      }
      default: {
        // 3 + s e with 0 < s < 1/e.
        const Rational s(Integer(std::uniform_int_distribution<long>(1, 367)(rng)), Integer(1000));
        out.push_back(Real::affine(Rational(3), s, Real::Constant::e));
        break;
      }
    }
  }
  return out;
}

std::vector<Rational> brute_force_capacities(const Rational& a, const Rational& b,
                                             std::size_t count) {
  const Rational lo = min(a, b);
  const Rational hi = max(a, b);
  // The values 0, lo, 2 lo, ... already give `count` elements, so nothing
  // beyond (count - 1) lo can be among the first `count`.
  const Rational ceiling = lo * Rational(count - 1);
  std::vector<Rational> values;
  for (Rational x; x <= ceiling; x += lo) {
    for (Rational y; x + y <= ceiling; y += hi) {
      values.push_back(x + y);
    }
  }
  std::sort(values.begin(), values.end());
  values.resize(count);
  return values;
}

}  // namespace staircase::cli
