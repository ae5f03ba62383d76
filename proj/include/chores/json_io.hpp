#pragma once

#include <string>

#include <json.hpp>

#include "chores/hffd.hpp"
#include "chores/instance.hpp"

namespace chores {

// Chores are rendered as labels "c1".."cm" (1-based universal positions).
std::string chore_label(ChoreId c);
ChoreId parse_chore_label(const std::string& label);

Instance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const Instance& inst);
Instance load_instance_file(const std::string& path);

nlohmann::json rational_to_json(const Rational& r);  // {"num":p,"den":q}
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json allocation_to_json(const Allocation& a);
Allocation allocation_from_json(const nlohmann::json& j);

// Tuples referencing an agent of an instance carry {items,bundles,agent,tau}.
// Self-contained tuples (e.g. with reduced chores) carry a "costs" array of
// "p/q" strings instead of "agent".
nlohmann::json tuple_to_json(const FfvTuple& t, int agent = -1);
FfvTuple tuple_from_json(const nlohmann::json& j, const IdoInstance* inst = nullptr);

}  // namespace chores
