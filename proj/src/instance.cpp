#include "chores/instance.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace chores {

void Instance::validate() const {
  if (n < 1) throw std::invalid_argument("instance needs at least one agent");
  if (m < 0) throw std::invalid_argument("negative chore count");
  if (static_cast<int>(costs.size()) != n)
    throw std::invalid_argument("cost matrix row count does not match n");
  for (const auto& row : costs) {
    if (static_cast<int>(row.size()) != m)
      throw std::invalid_argument("ragged cost matrix row");
    for (long long v : row)
      if (v < 0) throw std::invalid_argument("negative cost entry");
  }
}

IdoInstance IdoInstance::from_sorted(Instance inst) {
  inst.validate();
  for (const auto& row : inst.costs)
    if (!std::is_sorted(row.rbegin(), row.rend()))
      throw std::invalid_argument("instance is not in identical-order form");
  IdoInstance ido;
  ido.inst_ = std::move(inst);
  return ido;
}

long long IdoInstance::cost(int agent, const Bundle& b) const {
  long long total = 0;
  for (ChoreId c : b) total += cost(agent, c);
  return total;
}

long long IdoInstance::total_cost(int agent) const {
  const auto& row = inst_.costs.at(agent);
  return std::accumulate(row.begin(), row.end(), 0LL);
}

ChorePool IdoInstance::agent_pool(int agent) const {
  std::vector<Rational> costs;
  costs.reserve(inst_.m);
  for (long long v : inst_.costs.at(agent)) costs.emplace_back(v);
  return ChorePool(std::move(costs));
}

IdoInstance to_ido(const Instance& inst) {
  inst.validate();
  Instance sorted = inst;
  for (auto& row : sorted.costs) std::sort(row.rbegin(), row.rend());
  return IdoInstance::from_sorted(std::move(sorted));
}

long long bundle_cost(const IdoInstance& inst, int agent, const Bundle& b) {
  return inst.cost(agent, b);
}

Ordering lex_compare(const IdoInstance& inst, int agent, const Bundle& b1,
                     const Bundle& b2) {
  ChorePool pool = inst.agent_pool(agent);
  Bundle s1 = b1, s2 = b2;
  pool.sort_universal(s1);
  pool.sort_universal(s2);
  return lex_compare(pool, s1, s2);
}

Allocation from_ido_allocation(const Instance& original, const Allocation& ido_alloc) {
  original.validate();
  if (!ido_alloc.complete())
    throw std::invalid_argument("back-transform requires a complete allocation");
  int n = original.n;
  int m = original.m;
  if (static_cast<int>(ido_alloc.assignment.size()) != n ||
      static_cast<int>(ido_alloc.bundles.size()) != n)
    throw std::invalid_argument("allocation shape does not match instance");

  // owner[j] = agent holding universal position j in the IDO allocation.
  std::vector<int> owner(m, -1);
  for (int agent = 0; agent < n; ++agent)
    for (ChoreId c : ido_alloc.bundles[ido_alloc.assignment[agent]]) {
      if (c < 0 || c >= m || owner[c] != -1)
        throw std::invalid_argument("allocation is not a partition of the chores");
      owner[c] = agent;
    }
  for (int j = 0; j < m; ++j)
    if (owner[j] == -1)
      throw std::invalid_argument("back-transform requires a complete allocation");

  // Per agent: original chores sorted by that agent's cost, ascending, ties
  // by lower original index.
  std::vector<std::vector<int>> pref(n);
  std::vector<size_t> cursor(n, 0);
  for (int agent = 0; agent < n; ++agent) {
    pref[agent].resize(m);
    std::iota(pref[agent].begin(), pref[agent].end(), 0);
    const auto& row = original.costs[agent];
    std::stable_sort(pref[agent].begin(), pref[agent].end(),
                     [&row](int a, int b) { return row[a] < row[b]; });
  }

  std::vector<bool> picked(m, false);
  Allocation out;
  out.bundles.assign(n, {});
  out.assignment = ido_alloc.assignment;
  // Positions are handled cheapest-first: when position j (the (j+1)-th most
  // costly) comes up, m-1-j chores are gone, so the owner's cheapest
  // remaining chore costs at most their (m-j)-th smallest = (j+1)-th largest
  // value — exactly what the sorted view charges for position j.
  for (int j = m - 1; j >= 0; --j) {
    int agent = owner[j];
    auto& cur = cursor[agent];
    while (picked[pref[agent][cur]]) ++cur;
    int chosen = pref[agent][cur];
    picked[chosen] = true;
    out.bundles[ido_alloc.assignment[agent]].push_back(chosen);
  }
  for (auto& b : out.bundles) std::sort(b.begin(), b.end());
  return out;
}

}  // namespace chores
