#include "chores/monotonicity.hpp"

#include <algorithm>
#include <stdexcept>

#include "chores/ffd.hpp"
#include "chores/mms.hpp"

namespace chores {

namespace {

// Generates the subsets of rem (universal order) that are lexicographically
// >= the benchmark profile. Walks rem once, tracking whether the chosen
// prefix still matches the benchmark exactly or is already strictly above it.
struct SubsetGen {
  const ChorePool& pool;
  const Bundle& rem;
  std::vector<Rational> bench;
  const std::function<bool(const Bundle&)>& emit;
  Bundle chosen;
  bool stopped = false;

  Rational need(size_t t) const { return t < bench.size() ? bench[t] : Rational(0); }

  void equal_state(size_t idx) {
    if (stopped) return;
    size_t t = chosen.size();
    if (idx == rem.size()) {
      // Unmatched benchmark positions are fine iff they are all zero-cost:
      // the zero extension then makes the profiles lex-equal.
      bool equal = true;
      for (size_t q = t; q < bench.size(); ++q)
        if (bench[q] != Rational(0)) {
          equal = false;
          break;
        }
      if (equal && !emit(chosen)) stopped = true;
      return;
    }
    Rational c = pool.cost(rem[idx]);
    Rational b = need(t);
    if (b < c) {
      chosen.push_back(rem[idx]);
      free_state(idx + 1);  // strictly above the benchmark from here on
      chosen.pop_back();
      if (!stopped) equal_state(idx + 1);
    } else if (c == b) {
      chosen.push_back(rem[idx]);
      equal_state(idx + 1);
      chosen.pop_back();
      if (!stopped) equal_state(idx + 1);
    }
    // c < b: including drops below the benchmark, and no later chore can
    // supply position t either (costs are nonincreasing) — dead branch.
  }

  void free_state(size_t idx) {
    if (stopped) return;
    if (idx == rem.size()) {
      if (!emit(chosen)) stopped = true;
      return;
    }
    free_state(idx + 1);  // smaller bundles first
    if (stopped) return;
    chosen.push_back(rem[idx]);
    free_state(idx + 1);
    chosen.pop_back();
  }
};

bool visit_subsets(const ChorePool& pool, const Bundle& rem, const Rational& tau,
                   const std::function<bool(const Bundle&)>& emit) {
  Bundle bench = benchmark_bundle(pool, rem, tau);
  SubsetGen gen{pool, rem, {}, emit};
  gen.bench.reserve(bench.size());
  for (ChoreId c : bench) gen.bench.push_back(pool.cost(c));
  gen.equal_state(0);
  return !gen.stopped;
}

struct Enumerator {
  const ChorePool& pool;
  Rational tau;
  int n;
  const std::function<bool(const std::vector<Bundle>&)>& visit;
  std::vector<Bundle> stack;
  bool stopped = false;

  void level(const Bundle& rem) {
    if (static_cast<int>(stack.size()) == n) {
      if (!visit(stack)) stopped = true;
      return;
    }
    visit_subsets(pool, rem, tau, [&](const Bundle& s) {
      stack.push_back(s);
      level(bundle_minus(pool, rem, s));
      stack.pop_back();
      return !stopped;
    });
  }
};

}  // namespace

void enumerate_ffv(const ChorePool& pool, const Bundle& items, const Rational& tau,
                   int n, const std::function<bool(const std::vector<Bundle>&)>& visit) {
  if (static_cast<int>(items.size()) > kMaxEnumerationChores)
    throw std::invalid_argument("item set too large for enumeration");
  if (n < 1) throw std::invalid_argument("bundle count must be at least 1");
  Bundle sorted = items;
  pool.sort_universal(sorted);
  Enumerator e{pool, tau, n, visit};
  e.level(sorted);
}

std::vector<std::vector<Bundle>> enumerate_ffv(const ChorePool& pool,
                                               const Bundle& items,
                                               const Rational& tau, int n) {
  std::vector<std::vector<Bundle>> out;
  enumerate_ffv(pool, items, tau, n, [&out](const std::vector<Bundle>& bs) {
    out.push_back(bs);
    return true;
  });
  return out;
}

namespace {

// Collections that take the benchmark bundle at every level except (at most)
// one. This covers the classic non-monotonicity witnesses and stays cheap on
// item sets too large for the full enumeration.
std::optional<std::vector<Bundle>> single_deviation_search(const ChorePool& pool,
                                                           const Bundle& items,
                                                           const Rational& tau, int n) {
  std::optional<std::vector<Bundle>> found;
  for (int deviant = 0; deviant < n && !found; ++deviant) {
    Bundle rem = items;
    std::vector<Bundle> prefix;
    for (int k = 0; k < deviant; ++k) {
      prefix.push_back(benchmark_bundle(pool, rem, tau));
      rem = bundle_minus(pool, rem, prefix.back());
    }
    Bundle rem_at_deviant = rem;
    visit_subsets(pool, rem_at_deviant, tau, [&](const Bundle& s) {
      std::vector<Bundle> collection = prefix;
      collection.push_back(s);
      Bundle r = bundle_minus(pool, rem_at_deviant, s);
      for (int k = deviant + 1; k < n; ++k) {
        collection.push_back(benchmark_bundle(pool, r, tau));
        r = bundle_minus(pool, r, collection.back());
      }
      Rational left = 0;
      for (ChoreId c : r) left += pool.cost(c);
      if (left > Rational(0)) {  // zero-cost leftovers fit anywhere; not a witness
        found = collection;
        return false;
      }
      return true;
    });
  }
  return found;
}

}  // namespace

std::optional<MonotoneCounterexample> check_monotone(const ChorePool& pool,
                                                     const Bundle& items, int n,
                                                     const Rational& alpha) {
  Bundle sorted = items;
  pool.sort_universal(sorted);
  Rational mu = mms(pool, sorted, n).mu;
  Rational tau = alpha * mu;
  if (!ffd(pool, sorted, tau, n).complete()) return std::nullopt;

  auto wrap = [&](const std::vector<Bundle>& bs) {
    MonotoneCounterexample ce;
    ce.bundles = bs;
    ce.tau = tau;
    Bundle used;
    for (const auto& b : bs) used = bundle_union(pool, used, b);
    ce.unallocated = bundle_minus(pool, sorted, used);
    FfvTuple t{pool, sorted, bs, tau};
    if (!is_ffv(t)) throw std::logic_error("search produced an invalid witness");
    return ce;
  };

  if (auto quick = single_deviation_search(pool, sorted, tau, n))
    return wrap(*quick);

  constexpr int kMaxFullSearch = 10;
  if (static_cast<int>(sorted.size()) > kMaxFullSearch)
    throw std::invalid_argument("item set too large to certify the absence of witnesses");

  std::optional<MonotoneCounterexample> found;
  enumerate_ffv(pool, sorted, tau, n, [&](const std::vector<Bundle>& bs) {
    Bundle used;
    for (const auto& b : bs) used = bundle_union(pool, used, b);
    Bundle left = bundle_minus(pool, sorted, used);
    Rational left_cost = pool.cost(left);
    if (left_cost > Rational(0)) {  // zero-cost leftovers fit anywhere
      found = wrap(bs);
      return false;
    }
    return true;
  });
  return found;
}

CheckReport check_weak_monotone(const ChorePool& pool, const Bundle& items, int n,
                                const std::vector<Rational>& alpha_grid) {
  CheckReport report;
  Bundle sorted = items;
  pool.sort_universal(sorted);
  Rational mu = mms(pool, sorted, n).mu;
  std::vector<Rational> grid = alpha_grid;
  std::sort(grid.begin(), grid.end());
  std::vector<bool> success;
  success.reserve(grid.size());
  for (const auto& a : grid)
    success.push_back(ffd(pool, sorted, a * mu, n).complete());
  for (size_t i = 0; i < grid.size(); ++i)
    for (size_t j = i + 1; j < grid.size(); ++j)
      if (success[i] && !success[j])
        report.failures.push_back("succeeds at " + grid[i].str() + " but fails at " +
                                  grid[j].str());
  return report;
}

namespace {

Bundle filter_at_least(const ChorePool& pool, const Bundle& b, const Rational& gamma) {
  Bundle out;
  for (ChoreId c : b)
    if (pool.cost(c) >= gamma) out.push_back(c);
  return out;
}

}  // namespace

CheckReport benchmark_filter_check(const FfvTuple& t, const Rational& gamma) {
  CheckReport report;
  if (!is_ffv(t)) {
    report.failures.push_back("tuple is not first fit valid");
    return report;
  }
  Bundle remaining = t.items;
  t.pool.sort_universal(remaining);
  for (size_t k = 0; k < t.bundles.size(); ++k) {
    Bundle bench = benchmark_bundle(t.pool, remaining, t.tau);
    Bundle a = t.bundles[k];
    t.pool.sort_universal(a);
    Bundle fa = filter_at_least(t.pool, a, gamma);
    Bundle fb = filter_at_least(t.pool, bench, gamma);
    Ordering ord = lex_compare(t.pool, fa, fb);
    if (ord == Ordering::Less)
      report.failures.push_back("filtered bundle " + std::to_string(k + 1) +
                                " below its filtered benchmark");
    if (ord == Ordering::Greater && t.pool.cost(fa) <= t.tau)
      report.failures.push_back("filtered bundle " + std::to_string(k + 1) +
                                " strictly above benchmark but within tau");
    remaining = bundle_minus(t.pool, remaining, a);
  }
  return report;
}

}  // namespace chores
