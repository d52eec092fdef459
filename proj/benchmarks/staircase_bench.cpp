#include <benchmark/benchmark.h>

#include "staircase/ech.hpp"
#include "staircase/ehrhart.hpp"
#include "staircase/lemmas.hpp"
#include "staircase/regions.hpp"

namespace {

using staircase::Rational;

Rational frac(long n, long d) { return Rational(n) / Rational(d); }

void BM_CapacityPrefix(benchmark::State& state) {
  const staircase::Ellipsoid e(Rational(1), frac(4, 3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(staircase::capacity_prefix(e, static_cast<std::size_t>(state.range(0))));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CapacityPrefix)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_CapacityLowerBound(benchmark::State& state) {
  staircase::CapacitySequence target(staircase::Ellipsoid(Rational(1), frac(11, 6)));
  target.prefix(2001);
  for (auto _ : state) {
    benchmark::DoNotOptimize(staircase::capacity_lower_bound(frac(47, 10), target, 2000));
  }
}
BENCHMARK(BM_CapacityLowerBound);

void BM_TriangleCount(benchmark::State& state) {
  const staircase::RightTriangle tri(frac(1, 3), frac(1, 4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(staircase::triangle_count(tri, state.range(0)));
  }
}
BENCHMARK(BM_TriangleCount)->RangeMultiplier(10)->Range(10, 100000);

void BM_FitQuasiPolynomial(benchmark::State& state) {
  const staircase::RightTriangle tri(frac(7, 12), frac(5, 18));
  for (auto _ : state) {
    benchmark::DoNotOptimize(staircase::fit_quasi_polynomial(tri));
  }
}
BENCHMARK(BM_FitQuasiPolynomial);

void BM_RegionCountsSurd(benchmark::State& state) {
  const staircase::Real a(staircase::QuadraticSurd(Rational(3), frac(1, 3), staircase::Integer(5)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(staircase::region_counts(a, state.range(0)));
  }
}
BENCHMARK(BM_RegionCountsSurd)->Arg(100)->Arg(300)->Arg(1000);

void BM_RegionCountsPi(benchmark::State& state) {
  const auto a = staircase::Real::affine(Rational(3), frac(1, 4), staircase::Real::Constant::pi);
  for (auto _ : state) {
    benchmark::DoNotOptimize(staircase::region_counts(a, state.range(0)));
  }
}
BENCHMARK(BM_RegionCountsPi)->Arg(100)->Arg(300);

void BM_ClaimSteps(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(staircase::verify_claim_steps(60, 40));
  }
}
BENCHMARK(BM_ClaimSteps)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
