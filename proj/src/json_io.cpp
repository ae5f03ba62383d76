#include "chores/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace chores {

using nlohmann::json;

std::string chore_label(ChoreId c) { return "c" + std::to_string(c + 1); }

ChoreId parse_chore_label(const std::string& label) {
  if (label.size() < 2 || label[0] != 'c')
    throw std::invalid_argument("bad chore label: " + label);
  try {
    int idx = std::stoi(label.substr(1));
    if (idx < 1) throw std::invalid_argument("");
    return idx - 1;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad chore label: " + label);
  }
}

namespace {

Bundle bundle_from_json(const json& j) {
  Bundle b;
  for (const auto& e : j) {
    if (e.is_string())
      b.push_back(parse_chore_label(e.get<std::string>()));
    else
      b.push_back(e.get<int>());
  }
  return b;
}

json bundle_to_json(const Bundle& b) {
  json j = json::array();
  for (ChoreId c : b) j.push_back(chore_label(c));
  return j;
}

}  // namespace

Instance instance_from_json(const json& j) {
  Instance inst;
  if (!j.is_object() || !j.contains("n") || !j.contains("m") || !j.contains("costs"))
    throw std::invalid_argument("instance JSON needs fields n, m, costs");
  inst.n = j.at("n").get<int>();
  inst.m = j.at("m").get<int>();
  if (!j.at("costs").is_array())
    throw std::invalid_argument("costs must be an array of rows");
  for (const auto& row : j.at("costs")) {
    std::vector<long long> r;
    for (const auto& e : row) {
      if (!e.is_number_integer())
        throw std::invalid_argument("costs must be integers");
      r.push_back(e.get<long long>());
    }
    inst.costs.push_back(std::move(r));
  }
  inst.validate();  // rejects ragged rows and negative entries
  return inst;
}

json instance_to_json(const Instance& inst) {
  return json{{"n", inst.n}, {"m", inst.m}, {"costs", inst.costs}};
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return instance_from_json(j);
}

json rational_to_json(const Rational& r) {
  return json{{"num", r.num()}, {"den", r.den()}};
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  return Rational(j.at("num").get<long long>(), j.at("den").get<long long>());
}

json allocation_to_json(const Allocation& a) {
  json bundles = json::array();
  for (const auto& b : a.bundles) bundles.push_back(bundle_to_json(b));
  return json{{"bundles", bundles},
              {"assignment", a.assignment},
              {"unallocated", bundle_to_json(a.unallocated)}};
}

Allocation allocation_from_json(const json& j) {
  Allocation a;
  for (const auto& b : j.at("bundles")) a.bundles.push_back(bundle_from_json(b));
  a.assignment = j.at("assignment").get<std::vector<int>>();
  a.unallocated = bundle_from_json(j.at("unallocated"));
  return a;
}

json tuple_to_json(const FfvTuple& t, int agent) {
  json bundles = json::array();
  for (const auto& b : t.bundles) bundles.push_back(bundle_to_json(b));
  json j{{"items", bundle_to_json(t.items)},
         {"bundles", bundles},
         {"tau", rational_to_json(t.tau)}};
  if (agent >= 0) {
    j["agent"] = agent;
  } else {
    json costs = json::array();
    for (ChoreId c = 0; c < t.pool.size(); ++c) costs.push_back(t.pool.cost(c).str());
    j["costs"] = costs;
  }
  return j;
}

FfvTuple tuple_from_json(const json& j, const IdoInstance* inst) {
  FfvTuple t;
  if (j.contains("costs")) {
    std::vector<Rational> costs;
    for (const auto& e : j.at("costs")) costs.push_back(rational_from_json(e));
    t.pool = ChorePool(std::move(costs));
  } else if (j.contains("agent")) {
    if (!inst)
      throw std::invalid_argument("tuple references an agent but no instance given");
    t.pool = inst->agent_pool(j.at("agent").get<int>());
  } else {
    throw std::invalid_argument("tuple JSON needs either costs or agent");
  }
  t.items = bundle_from_json(j.at("items"));
  for (const auto& b : j.at("bundles")) t.bundles.push_back(bundle_from_json(b));
  t.tau = rational_from_json(j.at("tau"));
  t.normalize();
  validate_tuple(t);
  return t;
}

}  // namespace chores
