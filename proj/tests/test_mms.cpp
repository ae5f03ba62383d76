#include <doctest.h>

#include <random>
#include <stdexcept>

#include "chores/instance.hpp"
#include "chores/mms.hpp"
#include "helpers.hpp"

using namespace chores;
using test::example_instance;

TEST_CASE("exact split values on the fixture") {
  IdoInstance inst = IdoInstance::from_sorted(example_instance());
  Bundle all;
  for (int c = 0; c < inst.chores(); ++c) all.push_back(c);

  // Type A: optimum 74, e.g. {c1,c7,c9} {c2,c3,c8} {c4,c6,c10,c15} {c5,c11..c14}.
  CHECK(feasible(inst, 0, all, 4, Rational(75)));
  CHECK(feasible(inst, 0, all, 4, Rational(74)));
  CHECK_FALSE(feasible(inst, 0, all, 4, Rational(73)));
  // Type B: optimum 73.
  CHECK(feasible(inst, 3, all, 4, Rational(75)));
  CHECK(feasible(inst, 3, all, 4, Rational(73)));
  CHECK_FALSE(feasible(inst, 3, all, 4, Rational(72)));

  MmsCertificate a = mms(inst, 0, 4);
  CHECK(a.mu == Rational(74));
  MmsCertificate b = mms(inst, 3, 4);
  CHECK(b.mu == Rational(73));
}

TEST_CASE("feasible trivial shapes") {
  ChorePool pool({Rational(9), Rational(4), Rational(4)});
  Bundle items = pool.all_chores();
  CHECK(feasible(pool, items, 3, Rational(9)));          // singletons at max cost
  CHECK(feasible(pool, items, 1, Rational(17)));         // one bin holding everything
  CHECK_FALSE(feasible(pool, items, 1, Rational(16)));
  CHECK(feasible(pool, {}, 1, Rational(0)));
}

TEST_CASE("certificate invariants") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    ChorePool pool = test::random_pool(rng, 2 + rng() % 6, 15);
    Bundle items = pool.all_chores();
    MmsCertificate cert = mms(pool, items, n);
    CHECK(static_cast<int>(cert.partition.size()) == n);
    Bundle covered;
    for (const auto& p : cert.partition) {
      CHECK(pool.cost(p) <= cert.mu);
      covered = bundle_union(pool, covered, p);
    }
    CHECK(same_chore_set(covered, items));
    CHECK(feasible(pool, items, n, cert.mu));
    if (cert.mu > Rational(0))
      CHECK_FALSE(feasible(pool, items, n, cert.mu - Rational(1)));
  }
}

TEST_CASE("both exact routes match the assignment enumeration") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 3);
    int m = 1 + static_cast<int>(rng() % 7);
    ChorePool pool = test::random_pool(rng, m, 20);
    Bundle items = pool.all_chores();
    Rational reference = test::brute_force_mms(pool, items, n);
    CHECK(mms_by_bisection(pool, items, n).mu == reference);
    CHECK(mms_by_branch_and_bound(pool, items, n).mu == reference);
    CHECK(mms(pool, items, n).mu == reference);
  }
}

TEST_CASE("branch and bound handles rational costs") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> costs;
    int m = 2 + static_cast<int>(rng() % 5);
    for (int i = 0; i < m; ++i)
      costs.emplace_back(1 + static_cast<long long>(rng() % 30),
                         1 + static_cast<long long>(rng() % 4));
    ChorePool pool(std::move(costs));
    Bundle items = pool.all_chores();
    int n = 1 + static_cast<int>(rng() % 3);
    Rational reference = test::brute_force_mms(pool, items, n);
    CHECK(mms(pool, items, n).mu == reference);
    CHECK(mms_by_branch_and_bound(pool, items, n).mu == reference);
  }
}

TEST_CASE("single bundle count gives the total cost") {
  ChorePool pool({Rational(3), Rational(8), Rational(2)});
  CHECK(mms(pool, pool.all_chores(), 1).mu == Rational(13));
}

TEST_CASE("feasibility is monotone in the threshold") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    ChorePool pool = test::random_pool(rng, 2 + rng() % 6, 12);
    Bundle items = pool.all_chores();
    int n = 1 + static_cast<int>(rng() % 3);
    Rational mu = mms(pool, items, n).mu;
    CHECK(feasible(pool, items, n, mu + Rational(1, 2)));
    CHECK(feasible(pool, items, n, mu * Rational(2) + Rational(1)));
  }
}

TEST_CASE("size limits and argument checks") {
  ChorePool pool({Rational(1)});
  CHECK_THROWS_AS(mms(pool, pool.all_chores(), 0), std::invalid_argument);
  std::vector<Rational> many(kMaxExactChores + 1, Rational(1));
  ChorePool big(std::move(many));
  CHECK_THROWS_AS(mms(big, big.all_chores(), 2), std::invalid_argument);
}
