#pragma once

#include <vector>

#include "chores/rational.hpp"

namespace chores {

using ChoreId = int;
// A bundle is a duplicate-free list of chore ids, kept sorted in universal
// order so that bundle[p] is the (p+1)-th largest chore.
using Bundle = std::vector<ChoreId>;

// Cost view of a single agent over a growable set of chores. Costs are
// rational so that reduced chores (which may have fractional cost when the
// threshold is rational) live in the same model as ordinary integer chores.
//
// Universal order: larger cost first, lower id on ties. Chores created later
// get higher ids, which automatically places them after all existing chores
// of equal cost.
class ChorePool {
 public:
  ChorePool() = default;
  explicit ChorePool(std::vector<Rational> costs) : costs_(std::move(costs)) {}

  int size() const { return static_cast<int>(costs_.size()); }
  const Rational& cost(ChoreId c) const { return costs_.at(c); }
  Rational cost(const Bundle& b) const;
  bool integral() const;

  ChoreId add(const Rational& cost);

  bool before(ChoreId a, ChoreId b) const;
  void sort_universal(Bundle& b) const;
  Bundle all_chores() const;

 private:
  std::vector<Rational> costs_;
};

enum class Ordering { Less, Equal, Greater };

// Lexicographic comparison of cost profiles, with the zero extension past the
// end of the shorter bundle. Both bundles must be in universal order.
Ordering lex_compare(const ChorePool& pool, const Bundle& b1, const Bundle& b2);

// Set helpers over universal-order bundles (ids are unique, so plain id-set
// semantics apply; results come back in universal order).
Bundle bundle_minus(const ChorePool& pool, const Bundle& a, const Bundle& b);
Bundle bundle_union(const ChorePool& pool, const Bundle& a, const Bundle& b);
bool bundle_contains(const Bundle& b, ChoreId c);
bool same_chore_set(Bundle a, Bundle b);

}  // namespace chores
