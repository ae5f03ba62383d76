#include "chores/fptas.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "chores/ffd.hpp"

namespace chores {

Rational alpha_ratio(int n) {
  if (n < 2) throw std::invalid_argument("ratio defined for two or more machines");
  if (n == 2) return Rational(8, 7);
  if (n == 3) return Rational(15, 13);
  if (n <= 7) return Rational(20, 17);
  return Rational(13, 11);
}

int threshold_update_bound(int n, const Rational& epsilon) {
  if (epsilon <= Rational(0)) throw std::invalid_argument("epsilon must be positive");
  if (n < 2) return 0;
  Rational alpha = alpha_ratio(n);
  try {
    Rational acc = 1;
    int t = 0;
    while (acc < alpha) {
      acc *= Rational(1) + epsilon;
      ++t;
    }
    return t;
  } catch (const std::overflow_error&) {
    // Tiny epsilon: the exact power outgrows 64 bits. 80-bit logs are far
    // more precise than any boundary case these table ratios can produce.
    long double la = std::log(static_cast<long double>(alpha.num()) / alpha.den());
    long double ls =
        std::log1p(static_cast<long double>(epsilon.num()) / epsilon.den());
    return static_cast<int>(std::ceil(la / ls - 1e-12L));
  }
}

long long binary_search_threshold(const IdoInstance& inst, int agent, long long lo,
                                  long long hi, int n) {
  if (lo > hi) throw std::invalid_argument("binary search needs lo <= hi");
  ChorePool pool = inst.agent_pool(agent);
  Bundle items = pool.all_chores();
  long long l = lo, u = hi;
  while (l < u) {
    long long t = l + (u - l) / 2;
    if (ffd(pool, items, Rational(t), n).complete())
      u = t;
    else
      l = t + 1;
  }
  if (!ffd(pool, items, Rational(u), n).complete())
    throw std::invalid_argument("FFD must succeed at the upper bound");
  return u;
}

Allocation fptas_allocate(const IdoInstance& inst, const Rational& epsilon,
                          FptasStats* stats, AssignRule rule) {
  if (epsilon <= Rational(0)) throw std::invalid_argument("epsilon must be positive");
  int n = inst.agents();

  FptasStats local;
  FptasStats& st = stats ? *stats : local;
  st.thresholds.assign(n, 0);
  st.updates.assign(n, 0);
  st.history.clear();
  st.rounds = 0;

  if (inst.chores() == 0) {
    Allocation a;
    a.bundles.assign(n, {});
    a.assignment.resize(n);
    std::iota(a.assignment.begin(), a.assignment.end(), 0);
    return a;
  }

  std::vector<long long> total(n);
  std::vector<long long> h(n);
  for (int i = 0; i < n; ++i) {
    total[i] = std::max(inst.total_cost(i), 1LL);
    h[i] = binary_search_threshold(inst, i, 1, total[i], n);
  }

  int update_cap = threshold_update_bound(n, epsilon);
  int round_cap = (n >= 2 ? n * update_cap : 0) + 1;
  while (true) {
    ++st.rounds;
    if (st.rounds > round_cap)
      throw std::logic_error("threshold raises exceeded the runtime bound");
    std::vector<Rational> thresholds(h.begin(), h.end());
    Allocation alloc = hffd(inst, thresholds, rule);
    if (alloc.complete()) {
      st.thresholds.assign(h.begin(), h.end());
      return alloc;
    }
    int last = -1;
    for (int i = 0; i < n; ++i)
      if (alloc.assignment[i] == n - 1) last = i;
    long long lo = ((Rational(1) + epsilon) * Rational(h[last])).ceil();
    lo = std::min(lo, total[last]);
    h[last] = binary_search_threshold(inst, last, lo, total[last], n);
    if (++st.updates[last] > update_cap)
      throw std::logic_error("an agent's threshold was raised too often");
    st.history.emplace_back(last, h[last]);
  }
}

Allocation allocate(const Instance& original, const Rational& epsilon,
                    FptasStats* stats) {
  IdoInstance ido = to_ido(original);
  Allocation a = fptas_allocate(ido, epsilon, stats);
  return from_ido_allocation(original, a);
}

}  // namespace chores
