#pragma once

#include <vector>

#include "chores/hffd.hpp"
#include "chores/instance.hpp"

namespace chores {

// Worst-case FFD-to-optimum ratio by machine count.
Rational alpha_ratio(int n);

// Smallest t with (1+epsilon)^t >= alpha_ratio(n); bounds how often one
// agent's threshold can be raised. Zero for n < 2.
int threshold_update_bound(int n, const Rational& epsilon);

// Binary search for one agent's threshold: halve [lo, hi] on FFD success /
// failure and return the final upper bound.
long long binary_search_threshold(const IdoInstance& inst, int agent, long long lo,
                                  long long hi, int n);

struct FptasStats {
  std::vector<long long> thresholds;              // final per-agent thresholds
  std::vector<int> updates;                       // raises per agent
  std::vector<std::pair<int, long long>> history; // (agent, threshold) per raise
  int rounds = 0;
};

// The approximation scheme: per-agent threshold searches, HFFD rounds, and a
// (1+epsilon) threshold raise for the round's last agent whenever chores are
// left over. Output is always complete.
Allocation fptas_allocate(const IdoInstance& inst, const Rational& epsilon,
                          FptasStats* stats = nullptr,
                          AssignRule rule = AssignRule::TightestFirst);

// Full pipeline on a raw instance: sort to identical-order form, allocate,
// map bundles back to the original chores.
Allocation allocate(const Instance& original, const Rational& epsilon,
                    FptasStats* stats = nullptr);

// Epsilon for the three-agent mode whose final guarantee collapses to 15/13.
inline Rational exact_three_agent_epsilon() { return Rational(1, 26); }

}  // namespace chores
