#include "chores/hffd.hpp"

#include <algorithm>
#include <stdexcept>

#include "chores/ffd.hpp"
#include "chores/mms.hpp"

namespace chores {

namespace {

// Acceptance ratio v(bundle)/h; agents with a zero threshold only qualify
// with an empty-cost bundle and count as fully tight.
Rational tightness(long long load, const Rational& h) {
  if (h == Rational(0)) return Rational(1);
  return Rational(load) / h;
}

}  // namespace

Allocation hffd(const IdoInstance& inst, const std::vector<Rational>& thresholds,
                AssignRule rule) {
  int n = inst.agents();
  if (static_cast<int>(thresholds.size()) != n)
    throw std::invalid_argument("one threshold per agent required");
  for (const auto& h : thresholds)
    if (h < Rational(0)) throw std::invalid_argument("negative threshold");

  std::vector<bool> remaining_agent(n, true);
  Bundle remaining;
  for (int c = 0; c < inst.chores(); ++c) remaining.push_back(c);

  Allocation out;
  out.bundles.assign(n, {});
  out.assignment.assign(n, -1);

  for (int k = 0; k < n; ++k) {
    std::vector<long long> load(n, 0);
    Bundle rest;
    for (ChoreId c : remaining) {
      bool accepted = false;
      for (int i = 0; i < n && !accepted; ++i)
        if (remaining_agent[i] &&
            Rational(load[i] + inst.cost(i, c)) <= thresholds[i])
          accepted = true;
      if (accepted) {
        out.bundles[k].push_back(c);
        for (int i = 0; i < n; ++i)
          if (remaining_agent[i]) load[i] += inst.cost(i, c);
      } else {
        rest.push_back(c);
      }
    }
    remaining = std::move(rest);

    int chosen = -1;
    for (int i = 0; i < n; ++i) {
      if (!remaining_agent[i] || thresholds[i] < Rational(load[i])) continue;
      if (chosen == -1) {
        chosen = i;
      } else if (rule == AssignRule::TightestFirst &&
                 tightness(load[chosen], thresholds[chosen]) <
                     tightness(load[i], thresholds[i])) {
        chosen = i;
      }
    }
    if (chosen == -1)
      throw std::logic_error("closed bundle acceptable to no remaining agent");
    out.assignment[chosen] = k;
    remaining_agent[chosen] = false;
  }
  out.unallocated = std::move(remaining);
  return out;
}

Bundle FfvTuple::allocated() const {
  Bundle all;
  for (const auto& b : bundles) all.insert(all.end(), b.begin(), b.end());
  pool.sort_universal(all);
  return all;
}

Bundle FfvTuple::unallocated() const { return bundle_minus(pool, items, allocated()); }

void FfvTuple::normalize() {
  pool.sort_universal(items);
  for (auto& b : bundles) pool.sort_universal(b);
}

void validate_tuple(const FfvTuple& t) {
  std::vector<bool> in_items(t.pool.size(), false);
  for (ChoreId c : t.items) {
    if (c < 0 || c >= t.pool.size())
      throw std::invalid_argument("tuple references an unknown chore");
    if (in_items[c]) throw std::invalid_argument("duplicate chore in items");
    in_items[c] = true;
  }
  std::vector<bool> used(t.pool.size(), false);
  for (const auto& b : t.bundles)
    for (ChoreId c : b) {
      if (c < 0 || c >= t.pool.size() || !in_items[c])
        throw std::invalid_argument("bundle chore outside the item set");
      if (used[c]) throw std::invalid_argument("bundles are not disjoint");
      used[c] = true;
    }
}

FfvTuple agent_tuple(const IdoInstance& inst, const std::vector<Bundle>& bundles,
                     int agent, const Rational& tau) {
  FfvTuple t;
  t.pool = inst.agent_pool(agent);
  t.items = t.pool.all_chores();
  t.bundles = bundles;
  t.tau = tau;
  t.normalize();
  validate_tuple(t);
  return t;
}

FfvTuple last_agent_tuple(const IdoInstance& inst, const Allocation& alloc,
                          const std::vector<Rational>& thresholds, int* agent_out) {
  int n = inst.agents();
  int last = -1;
  for (int i = 0; i < n; ++i)
    if (alloc.assignment[i] == n - 1) last = i;
  if (last == -1) throw std::invalid_argument("allocation has no last agent");
  if (agent_out) *agent_out = last;
  return agent_tuple(inst, alloc.bundles, last, thresholds.at(last));
}

bool is_ffv(const FfvTuple& t) {
  validate_tuple(t);
  Bundle remaining = t.items;
  t.pool.sort_universal(remaining);
  for (const auto& raw : t.bundles) {
    Bundle a = raw;
    t.pool.sort_universal(a);
    Bundle bench = benchmark_bundle(t.pool, remaining, t.tau);
    if (lex_compare(t.pool, a, bench) == Ordering::Less) return false;
    remaining = bundle_minus(t.pool, remaining, a);
  }
  return true;
}

bool is_ffv_checked(const FfvTuple& t) {
  validate_tuple(t);
  auto cert = mms(t.pool, t.items, static_cast<int>(t.bundles.size()));
  if (t.tau < cert.mu)
    throw std::invalid_argument("threshold below the maximin share");
  return is_ffv(t);
}

namespace {

std::string bundle_str(const Bundle& b) {
  std::string s = "{";
  for (size_t i = 0; i < b.size(); ++i) {
    if (i) s += ",";
    s += "c" + std::to_string(b[i] + 1);
  }
  return s + "}";
}

}  // namespace

CheckReport ffv_lemma_checks(const FfvTuple& t) {
  validate_tuple(t);
  CheckReport report;
  if (t.items.size() > 16) {
    report.failures.push_back("item set too large for subset enumeration");
    return report;
  }
  // (a) a subset lexicographically above bundle k must cost more than tau.
  Bundle remaining = t.items;
  for (size_t k = 0; k < t.bundles.size(); ++k) {
    size_t m = remaining.size();
    for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
      Bundle sub;
      for (size_t i = 0; i < m; ++i)
        if (mask & (size_t{1} << i)) sub.push_back(remaining[i]);
      if (lex_compare(t.pool, sub, t.bundles[k]) == Ordering::Greater &&
          t.pool.cost(sub) <= t.tau)
        report.failures.push_back("bundle " + std::to_string(k + 1) +
                                  " is beaten by feasible subset " + bundle_str(sub));
    }
    remaining = bundle_minus(t.pool, remaining, t.bundles[k]);
  }
  // (b) unallocated chores cost more than tau - mu.
  Rational mu = mms(t.pool, t.items, static_cast<int>(t.bundles.size())).mu;
  for (ChoreId c : t.unallocated())
    if (t.pool.cost(c) <= t.tau - mu)
      report.failures.push_back("unallocated chore c" + std::to_string(c + 1) +
                                " costs at most tau - mu");
  return report;
}

}  // namespace chores
