#include "chores/reduction.hpp"

#include <algorithm>
#include <stdexcept>

#include "chores/ffd.hpp"
#include "chores/mms.hpp"

namespace chores {

bool is_redundant(const ChorePool& pool, const Bundle& b, int p, const Rational& mu) {
  if (p < 1 || p > static_cast<int>(b.size()))
    throw std::invalid_argument("position out of range");
  Rational prefix = 0;
  for (int q = 0; q < p - 1; ++q) prefix += pool.cost(b[q]);
  return prefix >= mu;
}

namespace {

struct DominationSearch {
  const ChorePool& pool;
  std::vector<ChoreId> targets;      // a \ b
  std::vector<Rational> capacity;    // remaining capacity per target
  std::vector<ChoreId> sources;      // b \ a, descending cost
  std::map<ChoreId, ChoreId>* f;

  bool assign(size_t idx) {
    if (idx == sources.size()) return true;
    const Rational& need = pool.cost(sources[idx]);
    for (size_t t = 0; t < targets.size(); ++t) {
      bool duplicate = false;
      for (size_t prev = 0; prev < t; ++prev)
        if (capacity[prev] == capacity[t]) {
          duplicate = true;
          break;
        }
      if (duplicate || capacity[t] < need) continue;
      capacity[t] -= need;
      (*f)[sources[idx]] = targets[t];
      if (assign(idx + 1)) return true;
      f->erase(sources[idx]);
      capacity[t] += need;
    }
    return false;
  }
};

}  // namespace

std::optional<std::map<ChoreId, ChoreId>> dominates(const ChorePool& pool,
                                                    const Bundle& a, const Bundle& b) {
  std::map<ChoreId, ChoreId> f;
  DominationSearch search{pool, {}, {}, {}, &f};
  for (ChoreId c : b) {
    if (bundle_contains(a, c))
      f[c] = c;  // shared chores stay in place and take no other preimage
    else
      search.sources.push_back(c);
  }
  Rational total_need = 0, total_cap = 0;
  for (ChoreId c : search.sources) total_need += pool.cost(c);
  for (ChoreId c : a)
    if (!bundle_contains(b, c)) {
      search.targets.push_back(c);
      search.capacity.push_back(pool.cost(c));
      total_cap += pool.cost(c);
    }
  if (total_cap < total_need) return std::nullopt;
  pool.sort_universal(search.sources);
  if (!search.assign(0)) return std::nullopt;
  return f;
}

namespace {

struct TidyState {
  FfvTuple tuple;                 // working copy
  std::vector<Bundle> partition;  // witness parts, mutated alongside

  void remove_chore(ChoreId c) {
    auto drop = [c](Bundle& b) { std::erase(b, c); };
    drop(tuple.items);
    for (auto& b : tuple.bundles) drop(b);
    for (auto& p : partition) drop(p);
  }

  int part_of(ChoreId c) const {
    for (size_t j = 0; j < partition.size(); ++j)
      if (bundle_contains(partition[j], c)) return static_cast<int>(j);
    throw std::logic_error("chore missing from the witness partition");
  }

  void move_chore(ChoreId c, int to) {
    int from = part_of(c);
    if (from == to) return;
    std::erase(partition[from], c);
    partition[to].push_back(c);
    tuple.pool.sort_universal(partition[to]);
  }
};

}  // namespace

TidyContext tidy_up(const FfvTuple& input, ChoreId cstar) {
  FfvTuple t = input;
  t.normalize();
  if (!is_ffv(t)) throw std::invalid_argument("tidy-up input is not first fit valid");
  if (!bundle_contains(t.unallocated(), cstar))
    throw std::invalid_argument("retained chore must be unallocated");

  int n = static_cast<int>(t.bundles.size());
  MmsCertificate cert = mms(t.pool, t.items, n);
  if (t.tau < cert.mu)
    throw std::invalid_argument("tidy-up requires tau >= mu");

  TidyContext ctx;
  ctx.mu = cert.mu;
  ctx.gamma = t.tau - cert.mu;
  ctx.cstar = cstar;
  ctx.original_bundles = t.bundles;

  TidyState st{t, cert.partition};

  // Other unallocated chores, then anything cheaper than cstar.
  for (ChoreId c : st.tuple.unallocated())
    if (c != cstar) st.remove_chore(c);
  for (ChoreId c : Bundle(st.tuple.items))
    if (st.tuple.pool.cost(c) < st.tuple.pool.cost(cstar)) st.remove_chore(c);

  // mu-redundant chores: per bundle, cut everything after the prefix reaches mu.
  for (auto& b : st.tuple.bundles) {
    Rational prefix = 0;
    size_t keep = 0;
    while (keep < b.size() && prefix < ctx.mu) prefix += st.tuple.pool.cost(b[keep++]);
    for (ChoreId c : Bundle(b.begin() + keep, b.end())) st.remove_chore(c);
  }

  // Domination loop: whenever a bundle dominates a part, rehouse the part's
  // chores via the mapping (the part ends up equal to the bundle) and delete
  // both, dropping the bundle's chores from the instance.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = 0; k < st.tuple.bundles.size() && !changed; ++k) {
      for (size_t j = 0; j < st.partition.size() && !changed; ++j) {
        auto f = dominates(st.tuple.pool, st.tuple.bundles[k], st.partition[j]);
        if (!f) continue;
        Bundle a = st.tuple.bundles[k];
        for (ChoreId target : a) {
          if (st.part_of(target) == static_cast<int>(j)) continue;  // shared
          int r = st.part_of(target);
          st.move_chore(target, static_cast<int>(j));
          for (const auto& [src, dst] : *f)
            if (dst == target) st.move_chore(src, r);
        }
        if (!same_chore_set(st.partition[j], a))
          throw std::logic_error("partition surgery did not converge on the bundle");
        st.tuple.bundles.erase(st.tuple.bundles.begin() + k);
        st.partition.erase(st.partition.begin() + j);
        st.tuple.items = bundle_minus(st.tuple.pool, st.tuple.items, a);
        changed = true;
      }
    }
  }

  ctx.tuple = std::move(st.tuple);
  ctx.partition = std::move(st.partition);
  return ctx;
}

CheckReport tidy_lemma_check(const TidyContext& ctx) {
  CheckReport report;
  const FfvTuple& t = ctx.tuple;
  auto fail = [&report](const std::string& name) { report.failures.push_back(name); };

  for (size_t k = 0; k < t.bundles.size(); ++k) {
    bool inside = false;
    for (const auto& orig : ctx.original_bundles) {
      bool sub = true;
      for (ChoreId c : t.bundles[k])
        if (!bundle_contains(orig, c)) {
          sub = false;
          break;
        }
      if (sub) {
        inside = true;
        break;
      }
    }
    if (!inside) fail("subset: bundle " + std::to_string(k + 1));
  }

  for (size_t k = 0; k < t.bundles.size(); ++k)
    for (int p = 1; p <= static_cast<int>(t.bundles[k].size()); ++p)
      if (is_redundant(t.pool, t.bundles[k], p, ctx.mu))
        fail("noredundant: bundle " + std::to_string(k + 1));

  Bundle un = t.unallocated();
  if (un.size() != 1 || un[0] != ctx.cstar)
    fail("smallest: retained chore is not the unique unallocated chore");
  for (ChoreId c : t.items)
    if (t.pool.cost(c) < t.pool.cost(ctx.cstar))
      fail("smallest: chore below the retained chore");

  for (ChoreId c : t.items)
    if (!(ctx.gamma < t.pool.cost(c)))
      fail("maxvalue: chore c" + std::to_string(c + 1) + " within tau - mu");

  if (ctx.partition.size() != t.bundles.size())
    fail("partition: part count differs from bundle count");
  Bundle covered;
  for (const auto& p : ctx.partition) {
    if (ctx.mu < t.pool.cost(p)) fail("partbound: part above mu");
    covered = bundle_union(t.pool, covered, p);
  }
  if (!same_chore_set(covered, t.items)) fail("partition: parts do not cover items");

  for (size_t k = 0; k < t.bundles.size(); ++k) {
    const Bundle& b = t.bundles[k];
    if (b.size() < 2) {
      fail("atleasttwochores: bundle " + std::to_string(k + 1));
      continue;
    }
    if (!(t.pool.cost(b[0]) + t.pool.cost(b[1]) < ctx.mu))
      fail("twochores: bundle " + std::to_string(k + 1));
  }
  for (size_t j = 0; j < ctx.partition.size(); ++j)
    if (ctx.partition[j].size() < 3)
      fail("threechores: part " + std::to_string(j + 1));
  return report;
}

Rational fit_in_space(const ChorePool& pool, const Bundle& b, const Rational& tau) {
  if (b.empty()) throw std::invalid_argument("fit-in space of an empty bundle");
  Rational prefix = 0;
  for (size_t i = 0; i + 1 < b.size(); ++i) prefix += pool.cost(b[i]);
  return tau - prefix;
}

std::map<ChoreId, ChoreClass> classify_chores(const FfvTuple& t) {
  std::map<ChoreId, ChoreClass> out;
  for (size_t k = 0; k < t.bundles.size(); ++k) {
    const Bundle& b = t.bundles[k];
    Rational next_max = 0;
    if (k + 1 < t.bundles.size() && !t.bundles[k + 1].empty())
      next_max = t.pool.cost(t.bundles[k + 1][0]);
    bool overflow = t.tau < t.pool.cost(b);
    for (size_t i = 0; i < b.size(); ++i) {
      if (overflow && i + 1 == b.size())
        out[b[i]] = ChoreClass::Excessive;
      else if (t.pool.cost(b[i]) >= next_max)
        out[b[i]] = ChoreClass::Regular;
      else
        out[b[i]] = ChoreClass::Fallback;
    }
  }
  return out;
}

CheckReport check_regular_ordering(const FfvTuple& t) {
  CheckReport report;
  auto classes = classify_chores(t);
  int prev = 0;
  for (size_t k = 0; k < t.bundles.size(); ++k) {
    int regular = 0;
    for (ChoreId c : t.bundles[k])
      if (classes[c] == ChoreClass::Regular) ++regular;
    if (k > 0 && regular < prev)
      report.failures.push_back("regular count drops at bundle " + std::to_string(k + 1));
    prev = regular;
  }
  return report;
}

std::optional<int> first_excessive_bundle(const FfvTuple& t) {
  for (size_t k = 0; k < t.bundles.size(); ++k)
    if (t.tau < t.pool.cost(t.bundles[k])) return static_cast<int>(k);
  return std::nullopt;
}

Rational suitable_reduced_cost(const TidyContext& ctx, int k) {
  auto first = first_excessive_bundle(ctx.tuple);
  if (!first || *first != k)
    throw std::invalid_argument("not the first bundle with an excessive chore");
  if (ctx.tuple.tau * Rational(7) < ctx.mu * Rational(8))
    throw std::invalid_argument("reduction requires tau >= (8/7) mu");
  const ChorePool& pool = ctx.tuple.pool;
  Rational fs = fit_in_space(pool, ctx.tuple.bundles[k], ctx.tuple.tau);
  Rational vstar = pool.cost(ctx.cstar);
  if (fs < vstar) return Rational(0);
  if (fs <= Rational(2) * ctx.gamma) {
    Rational best = fs;
    for (int j = 0; j <= k; ++j) {
      const Bundle& b = ctx.tuple.bundles[j];
      for (size_t i = 0; i + 1 < b.size(); ++i)
        best = std::min(best, pool.cost(b[i]));
    }
    return best;
  }
  return fs;
}

namespace {

void assert_large_case_shape(const TidyContext& ctx, int k) {
  const Bundle& b = ctx.tuple.bundles[k];
  auto classes = classify_chores(ctx.tuple);
  int regular = 0;
  for (ChoreId c : b)
    if (classes[c] == ChoreClass::Regular) ++regular;
  if (b.size() != 3 || regular != 2)
    throw std::logic_error("large fit-in space bundle is not two regular chores plus one");
}

}  // namespace

FfvTuple reduce_excessive(const FfvTuple& input, ChoreId cstar) {
  TidyContext ctx = tidy_up(input, cstar);
  int guard = static_cast<int>(input.bundles.size()) + 1;
  while (auto k = first_excessive_bundle(ctx.tuple)) {
    if (--guard < 0) throw std::logic_error("reduction failed to converge");
    Rational rc = suitable_reduced_cost(ctx, *k);
    const Rational fs = fit_in_space(ctx.tuple.pool, ctx.tuple.bundles[*k], ctx.tuple.tau);
    if (Rational(2) * ctx.gamma < fs) assert_large_case_shape(ctx, *k);

    FfvTuple cur = ctx.tuple;
    ChoreId removed = cur.bundles[*k].back();
    ChoreId fresh = cur.pool.add(rc);
    Bundle items2 = bundle_minus(cur.pool, cur.items, {removed});
    items2 = bundle_union(cur.pool, items2, {fresh});

    int nb = static_cast<int>(cur.bundles.size());
    FfdResult rebuilt = ffd(cur.pool, items2, cur.tau, nb);

    // Defining equation of a suitable reduced chore: the first bundles of the
    // FFD rerun cover exactly the old chores with the replacement swapped in.
    Bundle expected;
    for (int j = 0; j <= *k; ++j)
      expected = bundle_union(cur.pool, expected, cur.bundles[j]);
    expected = bundle_minus(cur.pool, expected, {removed});
    expected = bundle_union(cur.pool, expected, {fresh});
    Bundle got;
    for (int j = 0; j <= *k; ++j)
      got = bundle_union(cur.pool, got, rebuilt.bundles[j]);
    if (!same_chore_set(expected, got))
      throw std::logic_error("replacement chore is not a suitable reduced chore");

    std::vector<Bundle> bundles2(rebuilt.bundles.begin(), rebuilt.bundles.begin() + *k + 1);
    for (int j = *k + 1; j < nb; ++j) bundles2.push_back(cur.bundles[j]);
    cur.items = std::move(items2);
    cur.bundles = std::move(bundles2);
    ctx = tidy_up(cur, cstar);
  }
  return ctx.tuple;
}

CheckReport reduction_check(const FfvTuple& input, const FfvTuple& output,
                            ChoreId cstar) {
  CheckReport report;
  auto fail = [&report](const std::string& name) { report.failures.push_back(name); };
  if (!is_ffv(output)) fail("output is not first fit valid");
  if (output.bundles.size() > input.bundles.size()) fail("bundle count grew");
  Rational mu_in = mms(input.pool, input.items, static_cast<int>(input.bundles.size())).mu;
  Rational mu_out =
      mms(output.pool, output.items, static_cast<int>(output.bundles.size())).mu;
  if (mu_in < mu_out) fail("maximin share increased");
  Bundle un = output.unallocated();
  if (un.size() != 1 || un[0] != cstar) fail("retained chore is not the unique leftover");
  for (const auto& b : output.bundles)
    if (output.tau < output.pool.cost(b)) fail("bundle above tau survived");
  // FFD on the reduced instance still cannot place the retained chore: the
  // leftover profile must be exactly one chore of the retained chore's cost.
  FfdResult rerun = ffd(output.pool, output.items, output.tau,
                        static_cast<int>(output.bundles.size()));
  if (rerun.unallocated.size() != 1 ||
      output.pool.cost(rerun.unallocated[0]) != output.pool.cost(cstar))
    fail("FFD rerun does not strand the retained chore");
  return report;
}

}  // namespace chores
