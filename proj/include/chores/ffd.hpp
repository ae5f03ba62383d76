#pragma once

#include <vector>

#include "chores/core.hpp"
#include "chores/instance.hpp"

namespace chores {

struct FfdResult {
  std::vector<Bundle> bundles;
  Bundle unallocated;

  bool complete() const { return unallocated.empty(); }
};

// First Fit Decreasing with a fixed bin count: bundles are filled one at a
// time, scanning the remaining chores in universal order and inserting a
// chore iff the bundle stays within tau. Chores that fit nowhere stay
// unallocated.
FfdResult ffd(const ChorePool& pool, const Bundle& items, const Rational& tau, int n);

// Lexicographically maximal subset of items with cost <= tau. A single FFD
// bundle pass computes it (greedy insert in universal order).
Bundle benchmark_bundle(const ChorePool& pool, const Bundle& items, const Rational& tau);

struct MultifitProbe {
  long long tau;
  bool success;
};

// MultiFit: integer binary search for a threshold at which FFD allocates
// everything. Returns the search's final upper bound (FFD success is not
// monotone in tau, so "smallest feasible" is not well-defined; the contract
// is the sandwich mu <= result <= ceil(ratio * mu), asserted in tests).
long long multifit(const ChorePool& pool, const Bundle& items, int n, long long lo,
                   long long hi, std::vector<MultifitProbe>* trace = nullptr);

// Instance-level wrappers (assignment is the identity).
Allocation ffd(const IdoInstance& inst, int agent, const Rational& tau, int n);
long long multifit(const IdoInstance& inst, int agent, int n, long long lo,
                   long long hi, std::vector<MultifitProbe>* trace = nullptr);

}  // namespace chores
