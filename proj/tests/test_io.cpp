#include <doctest.h>

#include <stdexcept>

#include <json.hpp>

#include "chores/hffd.hpp"
#include "chores/json_io.hpp"
#include "helpers.hpp"

using namespace chores;
using nlohmann::json;
using test::example_instance;

TEST_CASE("chore labels") {
  CHECK(chore_label(0) == "c1");
  CHECK(chore_label(14) == "c15");
  CHECK(parse_chore_label("c15") == 14);
  CHECK_THROWS_AS(parse_chore_label("x3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_chore_label("c0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_chore_label("c"), std::invalid_argument);
}

TEST_CASE("instance round trip and rejection") {
  Instance inst = example_instance();
  Instance back = instance_from_json(instance_to_json(inst));
  CHECK(back.n == inst.n);
  CHECK(back.m == inst.m);
  CHECK(back.costs == inst.costs);

  CHECK_THROWS_AS(instance_from_json(json{{"n", 1}, {"m", 1}}), std::invalid_argument);
  CHECK_THROWS_AS(
      instance_from_json(json{{"n", 2}, {"m", 2}, {"costs", {{1, 2}, {3}}}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      instance_from_json(json{{"n", 1}, {"m", 1}, {"costs", {{-1}}}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      instance_from_json(json{{"n", 1}, {"m", 1}, {"costs", {{1.5}}}}),
      std::invalid_argument);
}

TEST_CASE("rational serialization") {
  Rational r(20, 17);
  CHECK(rational_from_json(rational_to_json(r)) == r);
  CHECK(rational_from_json(json("8/7")) == Rational(8, 7));
  CHECK(rational_from_json(json(5)) == Rational(5));
}

TEST_CASE("allocation round trip") {
  Allocation a;
  a.bundles = {{0, 6, 7}, {1, 2, 8}};
  a.assignment = {1, 0};
  a.unallocated = {14};
  Allocation back = allocation_from_json(allocation_to_json(a));
  CHECK(back.bundles == a.bundles);
  CHECK(back.assignment == a.assignment);
  CHECK(back.unallocated == a.unallocated);
  json j = allocation_to_json(a);
  CHECK(j.at("bundles")[0][0] == "c1");
  CHECK(j.at("unallocated")[0] == "c15");
}

TEST_CASE("tuple round trip through the agent form") {
  IdoInstance inst = IdoInstance::from_sorted(example_instance());
  Allocation a = hffd(inst, std::vector<Rational>(4, Rational(75)));
  FfvTuple t = agent_tuple(inst, a.bundles, 0, Rational(75));
  json j = tuple_to_json(t, 0);
  CHECK(j.at("agent") == 0);
  FfvTuple back = tuple_from_json(j, &inst);
  CHECK(back.items == t.items);
  CHECK(back.bundles == t.bundles);
  CHECK(back.tau == t.tau);
}

TEST_CASE("tuple round trip through the self-contained form") {
  ChorePool pool({Rational(5), Rational(7, 2), Rational(2)});
  FfvTuple t{pool, {0, 1, 2}, {{0}, {1}}, Rational(11, 2)};
  t.normalize();
  json j = tuple_to_json(t);
  CHECK(j.contains("costs"));
  FfvTuple back = tuple_from_json(j);
  CHECK(back.items == t.items);
  CHECK(back.bundles == t.bundles);
  CHECK(back.tau == t.tau);
  for (ChoreId c = 0; c < pool.size(); ++c)
    CHECK(back.pool.cost(c) == pool.cost(c));
}

TEST_CASE("tuple JSON requires an agent or explicit costs") {
  json j{{"items", {"c1"}}, {"bundles", json::array()}, {"tau", 1}};
  CHECK_THROWS_AS(tuple_from_json(j), std::invalid_argument);
  json j2 = j;
  j2["agent"] = 0;
  CHECK_THROWS_AS(tuple_from_json(j2), std::invalid_argument);  // no instance given
}
