#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "chores/hffd.hpp"

namespace chores {

inline constexpr int kMaxEnumerationChores = 16;

// Visits every ordered collection of n disjoint bundles over items in which
// each bundle is lexicographically >= its benchmark bundle. The visitor
// returns false to stop early. Generation prunes any partial bundle that can
// no longer match or beat the benchmark profile.
void enumerate_ffv(const ChorePool& pool, const Bundle& items, const Rational& tau,
                   int n, const std::function<bool(const std::vector<Bundle>&)>& visit);

// Convenience form collecting everything.
std::vector<std::vector<Bundle>> enumerate_ffv(const ChorePool& pool,
                                               const Bundle& items,
                                               const Rational& tau, int n);

struct MonotoneCounterexample {
  std::vector<Bundle> bundles;
  Bundle unallocated;
  Rational tau;
};

// Computes mu and tau = alpha * mu; when FFD at tau allocates everything,
// searches for a first-fit-valid collection that leaves chores of positive
// total cost out (zero-cost chores fit anywhere, so stranding them proves
// nothing). Absent when FFD fails at tau or no such collection exists.
std::optional<MonotoneCounterexample> check_monotone(const ChorePool& pool,
                                                     const Bundle& items, int n,
                                                     const Rational& alpha);

// For each grid ratio at which FFD succeeds, every larger grid ratio must
// succeed too; violations are reported as ratio pairs.
CheckReport check_weak_monotone(const ChorePool& pool, const Bundle& items, int n,
                                const std::vector<Rational>& alpha_grid);

// Filtered benchmark comparison: restricted to chores costing at least gamma,
// every bundle still matches or beats its benchmark, and a strict win implies
// the filtered bundle costs more than tau.
CheckReport benchmark_filter_check(const FfvTuple& t, const Rational& gamma);

}  // namespace chores
