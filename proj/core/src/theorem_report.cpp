#include "staircase/theorem_report.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "staircase/ech.hpp"
#include "staircase/four_thirds.hpp"
#include "staircase/lemmas.hpp"
#include "staircase/real.hpp"

namespace staircase {

namespace {

Rational frac(std::int64_t n, std::int64_t d) { return Rational(n) / Rational(d); }

TheoremCase classify(std::int64_t k, std::int64_t l) {
  if ((k == 1 && l == 1) || (k == 2 && l == 1) || (k == 3 && l == 2)) {
    return TheoremCase::staircase;
  }
  if (k == 4 && l == 3) {
    return TheoremCase::four_thirds;
  }
  if (l == 1) {
    return TheoremCase::integral;
  }
  if (l >= 2 && nicebound_excluded(k, l)) {
    return TheoremCase::exceptional;
  }
  return TheoremCase::nicebound;
}

// Right end of the contiguous stretch [1, end] covered by the bullets.
Rational coverage_end(const std::vector<BulletBound>& bullets) {
  Rational reach(1);
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (const BulletBound& bullet : bullets) {
      if (!bullet.empty() && bullet.domain_lo <= reach && reach < bullet.domain_hi) {
        reach = bullet.domain_hi;
        progressed = true;
      }
    }
  }
  return reach;
}

std::vector<BulletBound> select(const std::vector<BulletBound>& all, const std::set<int>& indices) {
  std::vector<BulletBound> out;
  for (const BulletBound& bullet : all) {
    if (indices.count(bullet.index) != 0 && !bullet.empty()) {
      out.push_back(bullet);
    }
  }
  return out;
}

CheckResult residue_check(const AccumulationData& acc) {
  const QuadraticSurd c(acc.per * acc.per / acc.vol - Rational(2));
  const QuadraticSurd residue = acc.a0 * acc.a0 - c * acc.a0 + QuadraticSurd(Rational(1));
  return {"accumulation-equation", "a0^2 - (per^2/vol - 2) a0 + 1 = 0, a0 >= 1",
          residue.sign() == 0 && acc.a0 >= QuadraticSurd(Rational(1)),
          "a0 = " + acc.a0.str() + ", residue = " + residue.str()};
}

void scan_checks(TheoremReport& report) {
  bool dominates = true;
  bool monotone = true;
  bool subscaling = true;
  std::string dominates_witness = "all rows";
  std::string monotone_witness = "all rows";
  std::string subscaling_witness = "all rows";
  for (std::size_t i = 0; i < report.scan.size(); ++i) {
    const ScanRow& row = report.scan[i];
    if (row.bullet && row.capacity < *row.bullet && dominates) {
      dominates = false;
      dominates_witness = "a = " + row.a.str();
    }
    if (i == 0) {
      continue;
    }
    const ScanRow& prev = report.scan[i - 1];
    if (row.capacity < prev.capacity && monotone) {
      monotone = false;
      monotone_witness = "a = " + row.a.str();
    }
    if (row.a / prev.a * prev.capacity < row.capacity && subscaling) {
      subscaling = false;
      subscaling_witness = "a = " + row.a.str();
    }
  }
  report.checks.push_back({"capacity-dominates-bullets",
                           "capacity bound >= bullet bound wherever a bullet applies", dominates,
                           dominates_witness});
  report.checks.push_back({"monotonicity", "capacity bound nondecreasing along the scan", monotone,
                           monotone_witness});
  report.checks.push_back({"subscaling",
                           "capacity bound at x2 <= (x2/x1) * capacity bound at x1, x1 < x2",
                           subscaling, subscaling_witness});
}

// c_b(a0) = sqrt(a0/b) is impossible when some bullet is strictly above the
// volume curve at a0. Otherwise a0 must be an admissible touch point where a
// constant bullet ends and a linear bullet starts at the volume value; then
// monotonicity and subscaling force c_b to be locally linear around a0.
CheckResult a0_certificate(const TheoremReport& report, const std::set<int>& allowed_touch) {
  const QuadraticSurd& a0 = report.accumulation.a0;
  const std::string hypothesis =
      "bullet bound at a0 above sqrt(a0/b), or a0 an admissible a_i between a constant "
      "and a linear bullet";

  std::optional<QuadraticSurd> bound_at_a0;
  int bound_index = 0;
  for (const BulletBound& bullet : report.governing_bullets) {
    if (bullet.contains(a0)) {
      const QuadraticSurd value = bullet.at(a0);
      if (!bound_at_a0 || *bound_at_a0 < value) {
        bound_at_a0 = value;
        bound_index = bullet.index;
      }
    }
  }
  if (!bound_at_a0) {
    return {"a0-excluded", hypothesis, false, "no governing bullet contains a0"};
  }
  const QuadraticSurd excess = *bound_at_a0 * *bound_at_a0 - a0 / QuadraticSurd(report.b);
  if (excess.sign() > 0) {
    return {"a0-excluded", hypothesis, true,
            "gap via bullet " + std::to_string(bound_index) + ": bound^2 - a0/b = " +
                excess.str() + " ~ " + excess.decimal(8)};
  }

  const auto a0_rational = a0.is_rational() ? std::optional(a0.rational_part()) : std::nullopt;
  const BulletBound* left = nullptr;
  const BulletBound* right = nullptr;
  for (const BulletBound& bullet : report.governing_bullets) {
    if (!a0_rational || bullet.touch_point != *a0_rational ||
        allowed_touch.count(bullet.index) == 0) {
      continue;
    }
    if (bullet.shape == BulletBound::Shape::constant && bullet.domain_lo < *a0_rational &&
        bullet.domain_hi == *a0_rational) {
      left = &bullet;
    }
    if (bullet.shape == BulletBound::Shape::linear && bullet.domain_lo == *a0_rational &&
        *a0_rational < bullet.domain_hi) {
      right = &bullet;
    }
  }
  if (left == nullptr || right == nullptr || left->at(*a0_rational) != right->at(*a0_rational)) {
    return {"a0-excluded", hypothesis, false,
            "bound^2 - a0/b = " + excess.str() + " at a0 = " + a0.str()};
  }
  return {"a0-excluded", hypothesis, true,
          "a0 = a" + std::to_string(left->index) + " = " + a0.str() + ", bullets " +
              std::to_string(left->index) + " and " + std::to_string(right->index) +
              " meet at " + left->at(*a0_rational).str()};
}

void generic_checks(TheoremReport& report, const std::vector<BulletBound>& all) {
  const QuadraticSurd& a0 = report.accumulation.a0;
  const std::int64_t k = report.k;
  const std::int64_t l = report.l;

  std::set<int> governing;
  std::set<int> allowed_touch;
  BoundCheck lemma;
  switch (report.kind) {
    case TheoremCase::nicebound:
      governing = {1, 2, 3, 4};
      allowed_touch = {1, 2, 3, 4};
      lemma = verify_nicebound(k, l);
      break;
    case TheoremCase::exceptional:
      governing = {1, 2, 3, 4, 5};
      allowed_touch = {1, 2, 3, 4};
      lemma = verify_exceptional(k, l);
      break;
    case TheoremCase::integral:
      governing = {1, 2, 3, 6, 7};
      allowed_touch = {1, 2, 3, 6};
      lemma = verify_exceptional(k, l);
      break;
    default:
      return;
  }
  report.governing_bullets = select(all, governing);
  report.checks.push_back({"bound-lemma", lemma.lemma + ": a0 < " + lemma.bound.str(),
                           lemma.verdict == LemmaVerdict::pass,
                           "margin " + lemma.margin.str() + " ~ " + lemma.margin.decimal(8)});

  const Rational end = coverage_end(report.governing_bullets);
  report.checks.push_back({"bullet-coverage", "governing bullets cover [1, a0] with a0 < end",
                           a0 < QuadraticSurd(end),
                           "end = " + end.str() + ", a0 ~ " + a0.decimal(10)});

  bool touch_ok = true;
  std::string touch_witness = "touch points below a0 are admissible";
  for (const BulletBound& bullet : report.governing_bullets) {
    if (bullet.contains(bullet.touch_point) && QuadraticSurd(bullet.touch_point) <= a0 &&
        allowed_touch.count(bullet.index) == 0) {
      touch_ok = false;
      touch_witness = "a" + std::to_string(bullet.index) + " = " + bullet.touch_point.str();
    }
  }
  report.checks.push_back({"touch-points", "only admissible a_i lie in [1, a0]", touch_ok,
                           touch_witness});
  report.checks.push_back(a0_certificate(report, allowed_touch));
}

}  // namespace

const char* to_string(TheoremCase kind) {
  switch (kind) {
    case TheoremCase::staircase:
      return "staircase";
    case TheoremCase::four_thirds:
      return "four-thirds";
    case TheoremCase::nicebound:
      return "nicebound";
    case TheoremCase::exceptional:
      return "exceptional";
    case TheoremCase::integral:
      return "integral";
  }
  return "unknown";
}

std::vector<ScanRow> scan_embedding_function(const Rational& b, const Rational& a_lo,
                                             const Rational& a_hi, const Rational& step,
                                             std::size_t n_cap) {
  if (a_lo < Rational(1) || a_hi < a_lo) {
    throw DomainError("scan range must satisfy 1 <= a_lo <= a_hi");
  }
  CapacitySequence target(Ellipsoid(Rational(1), b));
  std::vector<ScanRow> rows;
  for (const Rational& a : rational_grid(a_lo, a_hi, step)) {
    rows.push_back({a, QuadraticSurd::sqrt(a / b), bullet_lower_bound(b, a),
                    capacity_lower_bound(a, target, n_cap)});
  }
  return rows;
}

bool TheoremReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

TheoremReport theorem_report(std::int64_t k, std::int64_t l, const TheoremReportOptions& options) {
  TheoremReport report;
  report.accumulation = accumulation_point(k, l);
  report.k = k;
  report.l = l;
  report.b = frac(k, l);
  report.kind = classify(k, l);
  report.special =
      report.kind == TheoremCase::staircase || report.kind == TheoremCase::four_thirds;
  report.checks.push_back(residue_check(report.accumulation));

  const std::vector<BulletBound> all = bullet_bounds(report.b);
  const QuadraticSurd& a0 = report.accumulation.a0;

  switch (report.kind) {
    case TheoremCase::staircase: {
      report.governing_bullets = select(all, {1, 2, 3, 4, 5, 6, 7});
      const Rational end = coverage_end(report.governing_bullets);
      report.checks.push_back({"a0-beyond-bullets",
                               "a0 lies past the reach of the bullet bounds (no contradiction)",
                               QuadraticSurd(end) < a0,
                               "end = " + end.str() + ", a0 ~ " + a0.decimal(10)});
      break;
    }
    case TheoremCase::four_thirds: {
      report.governing_bullets = select(all, {1, 2, 3, 4, 5});
      const Rational a5 = all.at(4).touch_point;
      report.checks.push_back({"a0-at-a5", "a0 equals the touch point a5 = 3",
                               a0 == QuadraticSurd(a5), "a0 = " + a0.str()});
      const std::vector<Rational> grid = {Rational(2), frac(5, 2), frac(11, 4), Rational(3),
                                          frac(13, 4), frac(7, 2), Rational(4)};
      const FourThirdsReport sub = verify_43_case(options.t_max, grid, options.n_cap);
      report.checks.push_back({"four-thirds-case",
                               "c = 3/2 on [2,3] and (a+3)/4 on [3,4], both sides",
                               sub.passed(),
                               std::to_string(sub.rows.size()) + " grid points, t_max " +
                                   std::to_string(options.t_max)});
      break;
    }
    default:
      generic_checks(report, all);
      break;
  }

  // Scan [1, a0 + 1] on the step grid.
  const Real a0_real(a0);
  AffineRounder rounder(a0_real);
  const Rational inv_step = options.scan_step.reciprocal();
  const Rational hi = Rational(rounder.floor(inv_step, inv_step)) * options.scan_step;
  report.scan = scan_embedding_function(report.b, Rational(1), hi, options.scan_step, options.n_cap);
  scan_checks(report);
  return report;
}

}  // namespace staircase
