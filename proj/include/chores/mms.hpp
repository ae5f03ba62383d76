#pragma once

#include <vector>

#include "chores/core.hpp"
#include "chores/instance.hpp"

namespace chores {

// Hard size cap for the exact solver; the CLI refuses anything larger.
inline constexpr int kMaxExactChores = 20;
inline constexpr int kMaxExactBundles = 8;

struct MmsCertificate {
  Rational mu;
  std::vector<Bundle> partition;  // exactly n bundles, empties allowed
};

// True iff items split into <= n bundles each of cost <= tau. Depth-first
// search over items in universal order with identical-bin symmetry breaking
// and memoized failure states. Optionally emits a witness partition.
bool feasible(const ChorePool& pool, const Bundle& items, int n, const Rational& tau,
              std::vector<Bundle>* witness = nullptr);

// Exact MMS with witness. Integer-cost pools go through binary search on
// integer tau in [ceil(total/n), total]; rational-cost pools (reduced chores)
// fall back to branch-and-bound makespan minimization.
MmsCertificate mms(const ChorePool& pool, const Bundle& items, int n);

// The two routes individually, for cross-checking.
MmsCertificate mms_by_bisection(const ChorePool& pool, const Bundle& items, int n);
MmsCertificate mms_by_branch_and_bound(const ChorePool& pool, const Bundle& items, int n);

// Instance-level conveniences over one agent's view of all chores.
bool feasible(const IdoInstance& inst, int agent, const Bundle& items, int n,
              const Rational& tau);
MmsCertificate mms(const IdoInstance& inst, int agent, int n);

}  // namespace chores
