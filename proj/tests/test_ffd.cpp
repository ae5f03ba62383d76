#include <doctest.h>

#include <random>
#include <stdexcept>

#include "chores/ffd.hpp"
#include "chores/instance.hpp"
#include "chores/mms.hpp"
#include "chores/fptas.hpp"
#include "helpers.hpp"

using namespace chores;
using test::example_instance;

namespace {

// All subsets of items with cost <= tau, for the benchmark reference.
void all_subsets(const ChorePool& pool, const Bundle& items, size_t idx, Bundle& cur,
                 const Rational& tau, std::vector<Bundle>& out) {
  if (idx == items.size()) {
    if (pool.cost(cur) <= tau) out.push_back(cur);
    return;
  }
  all_subsets(pool, items, idx + 1, cur, tau, out);
  cur.push_back(items[idx]);
  all_subsets(pool, items, idx + 1, cur, tau, out);
  cur.pop_back();
}

}  // namespace

TEST_CASE("fixture bundles at threshold 75") {
  IdoInstance inst = IdoInstance::from_sorted(example_instance());
  Allocation a = ffd(inst, 0, Rational(75), 4);
  CHECK(a.complete());
  CHECK(a.bundles == std::vector<Bundle>{{0, 6, 7}, {1, 2, 8}, {3, 4, 9, 14}, {5, 10, 11, 12, 13}});
  std::vector<long long> costs_a;
  for (const auto& b : a.bundles) costs_a.push_back(inst.cost(0, b));
  CHECK(costs_a == std::vector<long long>{75, 66, 75, 70});

  Allocation b = ffd(inst, 3, Rational(75), 4);
  CHECK(b.complete());
  CHECK(b.bundles == std::vector<Bundle>{{0, 5}, {1, 2, 7}, {3, 4, 6}, {8, 9, 10, 11, 12, 13, 14}});
  std::vector<long long> costs_b;
  for (const auto& bb : b.bundles) costs_b.push_back(inst.cost(3, bb));
  CHECK(costs_b == std::vector<long long>{75, 75, 75, 66});
}

TEST_CASE("fixture fails at its own exact split value") {
  IdoInstance inst = IdoInstance::from_sorted(example_instance());
  Allocation a = ffd(inst, 0, Rational(74), 4);  // exact optimum for type A
  CHECK(a.unallocated == Bundle{14});
  Allocation b = ffd(inst, 3, Rational(73), 4);  // exact optimum for type B
  CHECK(b.unallocated == Bundle{14});
}

TEST_CASE("threshold below every chore leaves everything out") {
  ChorePool pool({Rational(5), Rational(4)});
  FfdResult r = ffd(pool, pool.all_chores(), Rational(3), 2);
  for (const auto& b : r.bundles) CHECK(b.empty());
  CHECK(r.unallocated == Bundle{0, 1});
}

TEST_CASE("benchmark bundle on the fixture and the empty set") {
  IdoInstance inst = IdoInstance::from_sorted(example_instance());
  ChorePool pool = inst.agent_pool(0);
  CHECK(benchmark_bundle(pool, pool.all_chores(), Rational(75)) == Bundle{0, 6, 7});
  CHECK(benchmark_bundle(pool, {}, Rational(75)).empty());
}

TEST_CASE("benchmark bundle beats every subset within the threshold") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    ChorePool pool = test::random_pool(rng, 2 + rng() % 8, 15);
    Bundle items = pool.all_chores();
    Rational tau(1 + static_cast<long long>(rng() % 40));
    Bundle bench = benchmark_bundle(pool, items, tau);
    CHECK(pool.cost(bench) <= tau);
    std::vector<Bundle> subsets;
    Bundle cur;
    all_subsets(pool, items, 0, cur, tau, subsets);
    for (const auto& s : subsets)
      CHECK(lex_compare(pool, bench, s) != Ordering::Less);
  }
}

TEST_CASE("every bundle equals the benchmark of the remaining chores") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    ChorePool pool = test::random_pool(rng, 1 + rng() % 12, 50);
    Bundle items = pool.all_chores();
    int n = 1 + static_cast<int>(rng() % 4);
    Rational tau(1 + static_cast<long long>(rng() % 80));
    FfdResult r = ffd(pool, items, tau, n);
    Bundle rem = items;
    for (const auto& b : r.bundles) {
      Bundle bench = benchmark_bundle(pool, rem, tau);
      CHECK(lex_compare(pool, b, bench) == Ordering::Equal);
      CHECK(b == bench);  // deterministic tie-breaks make them identical
      rem = bundle_minus(pool, rem, b);
    }
    // Leftovers fit in no bundle.
    for (ChoreId c : r.unallocated)
      for (const auto& b : r.bundles)
        CHECK(pool.cost(b) + pool.cost(c) > tau);
  }
}

TEST_CASE("full allocation at the table ratio threshold") {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    ChorePool pool = test::random_pool(rng, 1 + rng() % 9, 30);
    Bundle items = pool.all_chores();
    Rational mu = mms(pool, items, n).mu;
    FfdResult r = ffd(pool, items, alpha_ratio(n) * mu, n);
    CHECK(r.complete());
  }
}

TEST_CASE("multifit converges on a single chore") {
  ChorePool pool({Rational(7)});
  CHECK(multifit(pool, pool.all_chores(), 2, 1, 7) == 7);
}

TEST_CASE("multifit sandwich on the fixture") {
  IdoInstance inst = IdoInstance::from_sorted(example_instance());
  std::vector<MultifitProbe> trace;
  long long u = multifit(inst, 0, 4, 1, 286, &trace);
  CHECK(u >= 74);                      // exact optimum for type A
  CHECK(u <= (Rational(20, 17) * Rational(74)).ceil());
  CHECK(ffd(inst, 0, Rational(u), 4).complete());
  bool failed_below = false;
  for (const auto& p : trace)
    if (!p.success && p.tau < u) failed_below = true;
  CHECK((u == 1 || failed_below));
}

TEST_CASE("multifit argument checks") {
  ChorePool pool({Rational(7)});
  CHECK_THROWS_AS(multifit(pool, pool.all_chores(), 2, 5, 4), std::invalid_argument);
  CHECK_THROWS_AS(multifit(pool, pool.all_chores(), 2, 1, 6), std::invalid_argument);
}

TEST_CASE("multifit sandwich on random instances") {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    ChorePool pool = test::random_pool(rng, 1 + rng() % 8, 25);
    Bundle items = pool.all_chores();
    Rational total = pool.cost(items);
    if (total == Rational(0)) continue;
    Rational mu = mms(pool, items, n).mu;
    long long u = multifit(pool, items, n, 1, total.num());
    CHECK(Rational(u) >= mu);
    CHECK(u <= std::max<long long>(1, (alpha_ratio(n) * mu).ceil()));
    FfdResult r = ffd(pool, items, Rational(u), n);
    CHECK(r.complete());
  }
}
