#pragma once

#include <vector>

#include "chores/core.hpp"

namespace chores {

// Raw multi-agent instance: n agents, m chores, integer costs.
struct Instance {
  int n = 0;
  int m = 0;
  std::vector<std::vector<long long>> costs;  // costs[agent][chore]

  // Throws std::invalid_argument on ragged rows, negative costs, n < 1.
  void validate() const;
};

// Instance in identical-order-preference form: every agent's row is
// nonincreasing, so the universal ordering is simply the chore index order.
// original_index[j] records, per agent, which original chore sits at
// universal position j (bookkeeping only; the back-transform below does not
// need it, but it documents where each column came from).
class IdoInstance {
 public:
  // Requires every row to be sorted nonincreasing; use to_ido() otherwise.
  static IdoInstance from_sorted(Instance inst);

  int agents() const { return inst_.n; }
  int chores() const { return inst_.m; }
  long long cost(int agent, ChoreId c) const { return inst_.costs[agent][c]; }
  long long cost(int agent, const Bundle& b) const;
  long long total_cost(int agent) const;
  const Instance& instance() const { return inst_; }

  // Single-agent view; chore ids coincide with universal positions.
  ChorePool agent_pool(int agent) const;

 private:
  Instance inst_;
};

IdoInstance to_ido(const Instance& inst);

long long bundle_cost(const IdoInstance& inst, int agent, const Bundle& b);
Ordering lex_compare(const IdoInstance& inst, int agent, const Bundle& b1,
                     const Bundle& b2);

struct Allocation {
  std::vector<Bundle> bundles;  // A_1..A_n
  std::vector<int> assignment;  // agent i receives bundles[assignment[i]]
  Bundle unallocated;

  bool complete() const { return unallocated.empty(); }
};

// Maps a complete allocation of to_ido(original) back to the original chores.
// Positions are processed cheapest-first (j = m-1 down to 0); the agent
// owning position j picks their cheapest not-yet-picked original chore. With
// m-1-j chores already gone that pick costs at most the agent's (j+1)-th
// largest value — the sorted view's charge for position j — so each agent's
// final cost never exceeds their IDO bundle cost.
Allocation from_ido_allocation(const Instance& original, const Allocation& ido_alloc);

}  // namespace chores
