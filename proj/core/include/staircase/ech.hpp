#pragma once

#include <cstddef>
#include <queue>
#include <span>
#include <vector>

#include "staircase/ellipsoid.hpp"
#include "staircase/rational.hpp"

namespace staircase {

// ECH capacities of an ellipsoid: c_k(E(a, b)) is the (k+1)-st smallest
// element, with multiplicity, of {m a + n b : m, n >= 0}.
//
// Values are produced lazily by a min-frontier over the lattice; each pop
// emits one capacity and pushes at most two successors, so the first n
// values cost O(n log n). Not safe for concurrent use.
class CapacitySequence {
 public:
  explicit CapacitySequence(const Ellipsoid& ellipsoid);

  const Ellipsoid& ellipsoid() const { return ellipsoid_; }

  const Rational& at(std::size_t k);
  // First n values, extending as needed.
  std::span<const Rational> prefix(std::size_t n);
  std::size_t generated() const { return values_.size(); }

 private:
  struct Node {
    Integer value;  // in units of 1 / scale_
    Integer m;
    Integer n;
  };
  struct Greater {
    bool operator()(const Node& lhs, const Node& rhs) const { return lhs.value > rhs.value; }
  };

  void extend_to(std::size_t count);

  Ellipsoid ellipsoid_;
  Integer scale_;
  Integer step_a_;
  Integer step_b_;
  std::priority_queue<Node, std::vector<Node>, Greater> frontier_;
  std::vector<Rational> values_;
};

Rational capacity(const Ellipsoid& ellipsoid, std::size_t k);
std::vector<Rational> capacity_prefix(const Ellipsoid& ellipsoid, std::size_t n);

// max_{1 <= k <= n} c_k(E(1, a)) / c_k(E(1, b)): a certified lower bound for
// the embedding function c_b(a), not its exact value.
Rational capacity_lower_bound(const Rational& a, const Rational& b, std::size_t n);

// Same bound with a precomputed target sequence (reused across scans).
Rational capacity_lower_bound(const Rational& a, CapacitySequence& target, std::size_t n);

}  // namespace staircase
