#include <doctest.h>

#include <random>
#include <stdexcept>

#include "chores/core.hpp"
#include "chores/instance.hpp"
#include "chores/mms.hpp"
#include "helpers.hpp"

using namespace chores;
using test::example_instance;

TEST_CASE("rational normalization and parsing") {
  CHECK(Rational(3, 6) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational::parse("8/7").num() == 8);
  CHECK(Rational::parse("8/7").den() == 7);
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational(7).str() == "7");
  CHECK(Rational(20, 17).str() == "20/17");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
}

TEST_CASE("rational arithmetic and order") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(a > b);
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(6, 3).is_integer());
  CHECK_THROWS_AS(a / Rational(0), std::invalid_argument);
}

TEST_CASE("bundle cost on the fixture") {
  IdoInstance inst = IdoInstance::from_sorted(example_instance());
  CHECK(bundle_cost(inst, 0, {0, 6, 7}) == 75);  // 51+12+12
  CHECK(bundle_cost(inst, 3, {1, 2, 7}) == 75);  // 28+27+20
  CHECK(bundle_cost(inst, 2, {}) == 0);
}

TEST_CASE("lexicographic comparison of cost profiles") {
  IdoInstance inst = IdoInstance::from_sorted(example_instance());
  // (51,26) vs (51,12,12): decided at position 2.
  CHECK(lex_compare(inst, 0, {0, 5}, {0, 6, 7}) == Ordering::Greater);
  CHECK(lex_compare(inst, 0, {0, 6, 7}, {0, 5}) == Ordering::Less);
  CHECK(lex_compare(inst, 0, {0, 6, 7}, {0, 6, 7}) == Ordering::Equal);
  CHECK(lex_compare(inst, 0, {}, {14}) == Ordering::Less);
  // Zero extension: a trailing zero-cost chore does not change the profile.
  ChorePool pool({Rational(5), Rational(0)});
  CHECK(lex_compare(pool, {0}, {0, 1}) == Ordering::Equal);
}

TEST_CASE("universal order breaks cost ties by id") {
  ChorePool pool({Rational(3), Rational(5), Rational(3)});
  Bundle b = {2, 0, 1};
  pool.sort_universal(b);
  CHECK(b == Bundle{1, 0, 2});
  CHECK(pool.before(0, 2));
  CHECK_FALSE(pool.before(2, 0));
}

TEST_CASE("bundle set helpers") {
  ChorePool pool({Rational(9), Rational(7), Rational(7), Rational(1)});
  CHECK(bundle_minus(pool, {0, 1, 3}, {1}) == Bundle{0, 3});
  CHECK(bundle_union(pool, {0, 3}, {2}) == Bundle{0, 2, 3});
  CHECK(bundle_contains({0, 2}, 2));
  CHECK_FALSE(bundle_contains({0, 2}, 1));
  CHECK(same_chore_set({2, 0}, {0, 2}));
  CHECK_FALSE(same_chore_set({0}, {0, 2}));
}

TEST_CASE("instance validation") {
  Instance bad;
  bad.n = 2;
  bad.m = 2;
  bad.costs = {{1, 2}, {3}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.costs = {{1, 2}, {3, -1}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.n = 0;
  bad.costs = {};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  Instance unsorted;
  unsorted.n = 1;
  unsorted.m = 2;
  unsorted.costs = {{1, 2}};
  CHECK_THROWS_AS(IdoInstance::from_sorted(unsorted), std::invalid_argument);
}

TEST_CASE("to_ido sorts rows and is idempotent") {
  Instance inst;
  inst.n = 2;
  inst.m = 3;
  inst.costs = {{3, 1, 2}, {1, 2, 3}};
  IdoInstance ido = to_ido(inst);
  CHECK(ido.instance().costs == std::vector<std::vector<long long>>{{3, 2, 1}, {3, 2, 1}});
  IdoInstance again = to_ido(ido.instance());
  CHECK(again.instance().costs == ido.instance().costs);
}

TEST_CASE("to_ido preserves each agent's maximin share") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    Instance inst = test::random_instance(rng, 3, 6, 12);
    IdoInstance ido = to_ido(inst);
    for (int agent = 0; agent < inst.n; ++agent) {
      std::vector<Rational> raw;
      for (long long v : inst.costs[agent]) raw.emplace_back(v);
      ChorePool pool(std::move(raw));
      Rational before = test::brute_force_mms(pool, pool.all_chores(), inst.n);
      ChorePool sorted = ido.agent_pool(agent);
      Rational after = test::brute_force_mms(sorted, sorted.all_chores(), inst.n);
      CHECK(before == after);
    }
  }
}

TEST_CASE("back-transform keeps every agent at or below the sorted-view cost") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    int m = n + static_cast<int>(rng() % 7);
    Instance inst = test::random_instance(rng, n, m, 20);
    IdoInstance ido = to_ido(inst);

    Allocation ia;
    ia.bundles.assign(n, {});
    for (int c = 0; c < m; ++c) ia.bundles[rng() % n].push_back(c);
    ia.assignment.resize(n);
    for (int i = 0; i < n; ++i) ia.assignment[i] = i;
    std::shuffle(ia.assignment.begin(), ia.assignment.end(), rng);

    Allocation out = from_ido_allocation(inst, ia);
    CHECK(out.complete());
    std::vector<bool> seen(m, false);
    for (const auto& b : out.bundles)
      for (ChoreId c : b) {
        CHECK_FALSE(seen[c]);
        seen[c] = true;
      }
    for (int i = 0; i < n; ++i) {
      long long ido_cost = ido.cost(i, ia.bundles[ia.assignment[i]]);
      long long final_cost = 0;
      for (ChoreId c : out.bundles[out.assignment[i]]) final_cost += inst.costs[i][c];
      CHECK(final_cost <= ido_cost);
    }
  }
}

TEST_CASE("back-transform rejects incomplete allocations") {
  Instance inst;
  inst.n = 2;
  inst.m = 2;
  inst.costs = {{2, 1}, {2, 1}};
  Allocation ia;
  ia.bundles = {{0}, {}};
  ia.assignment = {0, 1};
  ia.unallocated = {1};
  CHECK_THROWS_AS(from_ido_allocation(inst, ia), std::invalid_argument);
}
