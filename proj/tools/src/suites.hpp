#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "staircase/check.hpp"
#include "staircase/real.hpp"

namespace staircase::cli {

struct SuiteOptions {
  std::int64_t t_max = 300;
  std::size_t n_cap = 2000;
  std::uint64_t seed = 1;
  std::size_t slice_samples = 20;
};

// Suite names in the order `all` runs them.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Runs one named suite, or every suite for "all".
std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& options);

// Values of a in (3, 4): rationals with large denominators, quadratic surds
// and affine images of pi and e, drawn from a seeded generator.
std::vector<Real> sample_slice_parameters(std::uint64_t seed, std::size_t count);

// Sorted {m a + n b} truncated to the first `count` values, by enumerating a
// box that is guaranteed to contain them.
std::vector<Rational> brute_force_capacities(const Rational& a, const Rational& b,
                                             std::size_t count);

}  // namespace staircase::cli
