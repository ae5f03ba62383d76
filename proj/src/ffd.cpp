#include "chores/ffd.hpp"

#include <numeric>
#include <stdexcept>

namespace chores {

FfdResult ffd(const ChorePool& pool, const Bundle& items, const Rational& tau, int n) {
  if (n < 1) throw std::invalid_argument("bundle count must be at least 1");
  Bundle remaining = items;
  pool.sort_universal(remaining);
  FfdResult out;
  out.bundles.assign(n, {});
  for (int k = 0; k < n; ++k) {
    Rational load = 0;
    Bundle rest;
    for (ChoreId c : remaining) {
      if (load + pool.cost(c) <= tau) {
        out.bundles[k].push_back(c);
        load += pool.cost(c);
      } else {
        rest.push_back(c);
      }
    }
    remaining = std::move(rest);
  }
  out.unallocated = std::move(remaining);
  return out;
}

Bundle benchmark_bundle(const ChorePool& pool, const Bundle& items, const Rational& tau) {
  return ffd(pool, items, tau, 1).bundles[0];
}

long long multifit(const ChorePool& pool, const Bundle& items, int n, long long lo,
                   long long hi, std::vector<MultifitProbe>* trace) {
  if (lo > hi) throw std::invalid_argument("multifit needs lo <= hi");
  if (!ffd(pool, items, Rational(hi), n).complete())
    throw std::invalid_argument("FFD must succeed at the upper bound");
  long long l = lo, u = hi;
  while (l < u) {
    long long t = l + (u - l) / 2;
    bool ok = ffd(pool, items, Rational(t), n).complete();
    if (trace) trace->push_back({t, ok});
    if (ok)
      u = t;
    else
      l = t + 1;
  }
  return u;
}

Allocation ffd(const IdoInstance& inst, int agent, const Rational& tau, int n) {
  ChorePool pool = inst.agent_pool(agent);
  FfdResult r = ffd(pool, pool.all_chores(), tau, n);
  Allocation a;
  a.bundles = std::move(r.bundles);
  a.unallocated = std::move(r.unallocated);
  a.assignment.resize(n);
  std::iota(a.assignment.begin(), a.assignment.end(), 0);
  return a;
}

long long multifit(const IdoInstance& inst, int agent, int n, long long lo,
                   long long hi, std::vector<MultifitProbe>* trace) {
  ChorePool pool = inst.agent_pool(agent);
  return multifit(pool, pool.all_chores(), n, lo, hi, trace);
}

}  // namespace chores
