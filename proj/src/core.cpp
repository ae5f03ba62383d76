#include "chores/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace chores {

Rational ChorePool::cost(const Bundle& b) const {
  Rational total = 0;
  for (ChoreId c : b) total += cost(c);
  return total;
}

bool ChorePool::integral() const {
  for (const auto& c : costs_)
    if (!c.is_integer()) return false;
  return true;
}

ChoreId ChorePool::add(const Rational& cost) {
  if (cost < Rational(0)) throw std::invalid_argument("negative chore cost");
  costs_.push_back(cost);
  return static_cast<ChoreId>(costs_.size()) - 1;
}

bool ChorePool::before(ChoreId a, ChoreId b) const {
  const Rational& ca = cost(a);
  const Rational& cb = cost(b);
  if (ca != cb) return cb < ca;
  return a < b;
}

void ChorePool::sort_universal(Bundle& b) const {
  std::sort(b.begin(), b.end(), [this](ChoreId x, ChoreId y) { return before(x, y); });
}

Bundle ChorePool::all_chores() const {
  Bundle b(costs_.size());
  for (int i = 0; i < size(); ++i) b[i] = i;
  sort_universal(b);
  return b;
}

Ordering lex_compare(const ChorePool& pool, const Bundle& b1, const Bundle& b2) {
  size_t len = std::max(b1.size(), b2.size());
  for (size_t p = 0; p < len; ++p) {
    Rational v1 = p < b1.size() ? pool.cost(b1[p]) : Rational(0);
    Rational v2 = p < b2.size() ? pool.cost(b2[p]) : Rational(0);
    if (v1 < v2) return Ordering::Less;
    if (v2 < v1) return Ordering::Greater;
  }
  return Ordering::Equal;
}

Bundle bundle_minus(const ChorePool& pool, const Bundle& a, const Bundle& b) {
  std::unordered_set<ChoreId> drop(b.begin(), b.end());
  Bundle out;
  for (ChoreId c : a)
    if (!drop.count(c)) out.push_back(c);
  (void)pool;  // already in universal order
  return out;
}

Bundle bundle_union(const ChorePool& pool, const Bundle& a, const Bundle& b) {
  Bundle out = a;
  std::unordered_set<ChoreId> seen(a.begin(), a.end());
  for (ChoreId c : b)
    if (seen.insert(c).second) out.push_back(c);
  pool.sort_universal(out);
  return out;
}

bool bundle_contains(const Bundle& b, ChoreId c) {
  return std::find(b.begin(), b.end(), c) != b.end();
}

bool same_chore_set(Bundle a, Bundle b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace chores
