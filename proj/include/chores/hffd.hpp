#pragma once

#include <string>
#include <vector>

#include "chores/core.hpp"
#include "chores/instance.hpp"

namespace chores {

// Tie-break used when several remaining agents accept a closed bundle.
enum class AssignRule {
  TightestFirst,  // maximize v_i(bundle)/h_i, ties by lowest index
  LowestIndex,
};

// Heterogeneous First Fit Decreasing: fills bundles in universal order,
// inserting a chore iff some remaining agent still accepts the bundle, then
// hands the bundle to an accepting agent and removes both.
Allocation hffd(const IdoInstance& inst, const std::vector<Rational>& thresholds,
                AssignRule rule = AssignRule::TightestFirst);

// Single-cost-function view of a bundle collection: the First-Fit-Valid
// abstraction. Self-contained (owns its cost pool) so that reduced chores
// with rational costs fit the same type.
struct FfvTuple {
  ChorePool pool;
  Bundle items;                 // universal order
  std::vector<Bundle> bundles;  // pairwise disjoint subsets of items
  Rational tau;

  Bundle allocated() const;
  Bundle unallocated() const;
  void normalize();  // sorts items and bundles into universal order
};

// Throws std::invalid_argument when bundles overlap or leave items.
void validate_tuple(const FfvTuple& t);

// View of an HFFD run through the agent that received the last bundle.
FfvTuple last_agent_tuple(const IdoInstance& inst, const Allocation& alloc,
                          const std::vector<Rational>& thresholds, int* agent = nullptr);
FfvTuple agent_tuple(const IdoInstance& inst, const std::vector<Bundle>& bundles,
                     int agent, const Rational& tau);

// True iff every bundle is lexicographically >= its benchmark bundle among
// the chores not used by earlier bundles.
bool is_ffv(const FfvTuple& t);
// Same, but first checks tau >= MMS(items, n) with the exact oracle.
bool is_ffv_checked(const FfvTuple& t);

struct CheckReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Enumeration checks behind the FFV abstraction: (a) any subset beating a
// bundle lexicographically costs more than tau; (b) every unallocated chore
// costs more than tau - mu. Small items sets only.
CheckReport ffv_lemma_checks(const FfvTuple& t);

}  // namespace chores
