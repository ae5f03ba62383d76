#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "chores/core.hpp"
#include "chores/instance.hpp"

namespace chores::test {

// The 4-agent, 15-chore fixture shipped in data/strand15.json: three agents
// of type A and one of type B. Exhaustively verified facts about it used
// across the tests: MMS is 74 for type A and 73 for type B, both types admit
// partitions with max cost 75, FFD at 75 allocates everything for either type
// alone, and HFFD with all thresholds 75 strands c15.
inline Instance example_instance() {
  Instance inst;
  inst.n = 4;
  inst.m = 15;
  std::vector<long long> type_a = {51, 28, 27, 27, 27, 26, 12, 12, 11, 11, 11, 11, 11, 11, 10};
  std::vector<long long> type_b = {51, 28, 27, 27, 27, 24, 21, 20, 10, 10, 10, 9, 9, 9, 9};
  inst.costs = {type_a, type_a, type_a, type_b};
  return inst;
}

// Independent reference for the exact solver: try every assignment of items
// to n bundles. Only sane for |items| <= 8 or so.
inline Rational brute_force_mms(const ChorePool& pool, const Bundle& items, int n) {
  size_t m = items.size();
  Rational best = pool.cost(items) + Rational(1);
  std::vector<int> where(m, 0);
  while (true) {
    std::vector<Rational> loads(n, Rational(0));
    for (size_t i = 0; i < m; ++i) loads[where[i]] += pool.cost(items[i]);
    Rational mx = 0;
    for (const auto& l : loads) mx = std::max(mx, l);
    best = std::min(best, mx);
    size_t i = 0;
    while (i < m && where[i] == n - 1) where[i++] = 0;
    if (i == m) break;
    ++where[i];
  }
  return best;
}

inline std::vector<long long> random_costs(std::mt19937& rng, int m, int max_cost) {
  std::uniform_int_distribution<long long> d(0, max_cost);
  std::vector<long long> out(m);
  for (auto& v : out) v = d(rng);
  return out;
}

inline ChorePool random_pool(std::mt19937& rng, int m, int max_cost) {
  std::vector<Rational> costs;
  std::uniform_int_distribution<long long> d(0, max_cost);
  for (int i = 0; i < m; ++i) costs.emplace_back(d(rng));
  return ChorePool(std::move(costs));
}

inline Instance random_instance(std::mt19937& rng, int n, int m, int max_cost) {
  Instance inst;
  inst.n = n;
  inst.m = m;
  for (int i = 0; i < n; ++i) inst.costs.push_back(random_costs(rng, m, max_cost));
  return inst;
}

// Random instance already in identical-order form.
inline IdoInstance random_ido(std::mt19937& rng, int n, int m, int max_cost) {
  Instance inst = random_instance(rng, n, m, max_cost);
  for (auto& row : inst.costs) std::sort(row.begin(), row.end(), std::greater<>());
  return IdoInstance::from_sorted(std::move(inst));
}

}  // namespace chores::test
