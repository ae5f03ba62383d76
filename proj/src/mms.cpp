#include "chores/mms.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace chores {

namespace {

struct KeyHash {
  size_t operator()(const std::vector<long long>& key) const {
    size_t h = 1469598103934665603ull;
    for (long long v : key) {
      h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct FeasibleSearch {
  const ChorePool& pool;
  std::vector<ChoreId> items;  // universal order (descending cost)
  int n;
  Rational tau;
  std::vector<Rational> load;
  std::vector<int> bin_of;
  std::unordered_set<std::vector<long long>, KeyHash> failed;

  FeasibleSearch(const ChorePool& p, Bundle its, int bins, const Rational& t)
      : pool(p), items(std::move(its)), n(bins), tau(t) {
    pool.sort_universal(items);
    load.assign(n, Rational(0));
    bin_of.assign(items.size(), -1);
  }

  std::vector<long long> state_key(size_t idx) const {
    std::vector<long long> sorted;
    sorted.reserve(2 * n + 1);
    std::vector<Rational> ls = load;
    std::sort(ls.begin(), ls.end());
    sorted.push_back(static_cast<long long>(idx));
    for (const auto& l : ls) {
      sorted.push_back(l.num());
      sorted.push_back(l.den());
    }
    return sorted;
  }

  bool dfs(size_t idx) {
    if (idx == items.size()) return true;
    auto key = state_key(idx);
    if (failed.count(key)) return false;
    const Rational& c = pool.cost(items[idx]);
    for (int b = 0; b < n; ++b) {
      bool duplicate = false;
      for (int prev = 0; prev < b; ++prev)
        if (load[prev] == load[b]) {
          duplicate = true;
          break;
        }
      if (duplicate) continue;
      if (load[b] + c <= tau) {
        load[b] += c;
        bin_of[idx] = b;
        if (dfs(idx + 1)) return true;
        bin_of[idx] = -1;
        load[b] -= c;
      }
      if (load[b] == Rational(0)) break;  // later empty bins are symmetric
    }
    failed.insert(std::move(key));
    return false;
  }
};

std::vector<Bundle> collect_partition(const ChorePool& pool,
                                      const std::vector<ChoreId>& items,
                                      const std::vector<int>& bin_of, int n) {
  std::vector<Bundle> parts(n);
  for (size_t i = 0; i < items.size(); ++i) parts[bin_of[i]].push_back(items[i]);
  for (auto& p : parts) pool.sort_universal(p);
  return parts;
}

struct MakespanSearch {
  const ChorePool& pool;
  std::vector<ChoreId> items;
  int n;
  Rational best;
  std::vector<int> best_bins;
  Rational lower;
  std::vector<Rational> load;
  std::vector<int> bin_of;
  bool done = false;

  MakespanSearch(const ChorePool& p, Bundle its, int bins)
      : pool(p), items(std::move(its)), n(bins) {
    pool.sort_universal(items);
    load.assign(n, Rational(0));
    bin_of.assign(items.size(), -1);
    Rational total = pool.cost(items);
    lower = total / Rational(n);
    if (!items.empty() && lower < pool.cost(items[0])) lower = pool.cost(items[0]);
    seed_with_lpt();
  }

  // Longest-processing-time greedy gives the initial upper bound.
  void seed_with_lpt() {
    std::vector<Rational> l(n, Rational(0));
    best_bins.assign(items.size(), 0);
    for (size_t i = 0; i < items.size(); ++i) {
      int argmin = 0;
      for (int b = 1; b < n; ++b)
        if (l[b] < l[argmin]) argmin = b;
      l[argmin] += pool.cost(items[i]);
      best_bins[i] = argmin;
    }
    best = *std::max_element(l.begin(), l.end());
  }

  void dfs(size_t idx, const Rational& cur_max) {
    if (done || !(cur_max < best)) return;
    if (idx == items.size()) {
      best = cur_max;
      best_bins = bin_of;
      if (best <= lower) done = true;
      return;
    }
    const Rational& c = pool.cost(items[idx]);
    for (int b = 0; b < n && !done; ++b) {
      bool duplicate = false;
      for (int prev = 0; prev < b; ++prev)
        if (load[prev] == load[b]) {
          duplicate = true;
          break;
        }
      if (duplicate) continue;
      Rational next = load[b] + c;
      if (next < best) {
        load[b] = next;
        bin_of[idx] = b;
        dfs(idx + 1, std::max(cur_max, next));
        load[b] -= c;
        bin_of[idx] = -1;
      }
      if (load[b] == Rational(0)) break;
    }
  }
};

void check_size(const Bundle& items, int n) {
  if (n < 1) throw std::invalid_argument("bundle count must be at least 1");
  if (static_cast<int>(items.size()) > kMaxExactChores || n > kMaxExactBundles)
    throw std::invalid_argument("instance exceeds the exact-solver size limit");
}

}  // namespace

bool feasible(const ChorePool& pool, const Bundle& items, int n, const Rational& tau,
              std::vector<Bundle>* witness) {
  check_size(items, n);
  for (ChoreId c : items)
    if (tau < pool.cost(c)) return false;
  FeasibleSearch search(pool, items, n, tau);
  if (!search.dfs(0)) return false;
  if (witness) *witness = collect_partition(pool, search.items, search.bin_of, n);
  return true;
}

MmsCertificate mms_by_bisection(const ChorePool& pool, const Bundle& items, int n) {
  check_size(items, n);
  for (ChoreId c : items)
    if (!pool.cost(c).is_integer())
      throw std::invalid_argument("bisection requires integer costs");
  Rational total = pool.cost(items);
  long long lo = (total / Rational(n)).ceil();
  long long hi = total.num();
  for (ChoreId c : items) lo = std::max(lo, pool.cost(c).num());
  while (lo < hi) {
    long long mid = lo + (hi - lo) / 2;
    if (feasible(pool, items, n, Rational(mid)))
      hi = mid;
    else
      lo = mid + 1;
  }
  MmsCertificate cert;
  cert.mu = Rational(lo);
  if (!feasible(pool, items, n, cert.mu, &cert.partition))
    throw std::logic_error("bisection converged to an infeasible threshold");
  return cert;
}

MmsCertificate mms_by_branch_and_bound(const ChorePool& pool, const Bundle& items,
                                       int n) {
  check_size(items, n);
  MmsCertificate cert;
  if (items.empty()) {
    cert.mu = Rational(0);
    cert.partition.assign(n, {});
    return cert;
  }
  MakespanSearch search(pool, items, n);
  search.dfs(0, Rational(0));
  cert.mu = search.best;
  cert.partition = collect_partition(pool, search.items, search.best_bins, n);
  return cert;
}

MmsCertificate mms(const ChorePool& pool, const Bundle& items, int n) {
  bool ints = true;
  for (ChoreId c : items)
    if (!pool.cost(c).is_integer()) {
      ints = false;
      break;
    }
  if (ints && !items.empty()) return mms_by_bisection(pool, items, n);
  if (items.empty()) {
    check_size(items, n);
    return {Rational(0), std::vector<Bundle>(n)};
  }
  return mms_by_branch_and_bound(pool, items, n);
}

bool feasible(const IdoInstance& inst, int agent, const Bundle& items, int n,
              const Rational& tau) {
  return feasible(inst.agent_pool(agent), items, n, tau);
}

MmsCertificate mms(const IdoInstance& inst, int agent, int n) {
  return mms(inst.agent_pool(agent), inst.agent_pool(agent).all_chores(), n);
}

}  // namespace chores
