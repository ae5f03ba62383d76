#pragma once

#include <map>
#include <optional>
#include <vector>

#include "chores/hffd.hpp"

namespace chores {

// Context carried through the tidy-up of a bundle collection: the cleaned
// tuple, the maximin share mu of the *input* item set, gamma = tau - mu, a
// witness partition whose parts all stay within mu, and the retained
// unallocated chore.
struct TidyContext {
  FfvTuple tuple;
  Rational mu;
  Rational gamma;
  std::vector<Bundle> partition;         // same count as tuple.bundles
  ChoreId cstar = -1;
  std::vector<Bundle> original_bundles;  // bundles of the tidy-up input
};

// True iff the chore at 1-based position p of b is redundant: the bundle
// prefix before it already costs at least mu.
bool is_redundant(const ChorePool& pool, const Bundle& b, int p, const Rational& mu);

// Searches for a many-to-one mapping f: b -> a with v(f^-1(c')) <= v(c') for
// every c' in a. Chores present in both bundles are mapped to themselves and
// receive no other preimage (always possible when any mapping exists; it is
// what makes the tidy-up partition surgery leave the deleted part equal to
// the deleted bundle). Returns the mapping from each chore of b to its image.
std::optional<std::map<ChoreId, ChoreId>> dominates(const ChorePool& pool,
                                                    const Bundle& a, const Bundle& b);

// Tidy-Up: drops other unallocated chores, chores cheaper than cstar and
// mu-redundant chores, then repeatedly removes bundle/part pairs where the
// bundle dominates the part (with the partition surgery that rehouses the
// part's chores). Scan order: bundles ascending, parts ascending.
TidyContext tidy_up(const FfvTuple& t, ChoreId cstar);

// All structural guarantees of a tidy tuple, reported by name.
CheckReport tidy_lemma_check(const TidyContext& ctx);

// tau minus the bundle cost without its last chore.
Rational fit_in_space(const ChorePool& pool, const Bundle& b, const Rational& tau);

enum class ChoreClass { Excessive, Regular, Fallback };

// Labels every allocated chore. Excessive: last chore of a bundle whose cost
// exceeds tau. Regular: costs at least as much as the largest chore of the
// next bundle (trivially regular in the final bundle). Fallback: the rest.
std::map<ChoreId, ChoreClass> classify_chores(const FfvTuple& t);

// On tidy tuples the count of regular chores per bundle is nondecreasing.
CheckReport check_regular_ordering(const FfvTuple& t);

// Index of the first bundle whose cost exceeds tau, or nullopt.
std::optional<int> first_excessive_bundle(const FfvTuple& t);

// Cost of the replacement chore for the first excessive chore, by the
// three-way split on the fit-in space. Requires tau >= (8/7) mu.
Rational suitable_reduced_cost(const TidyContext& ctx, int k);

// Repeatedly tidies and replaces the first excessive chore by a suitable
// reduced chore, rebuilding the first bundles with FFD, until no bundle
// exceeds tau. The replacement is verified against the defining chore-union
// equation on every iteration.
FfvTuple reduce_excessive(const FfvTuple& t, ChoreId cstar);

// Output contract of the reduction relative to its input.
CheckReport reduction_check(const FfvTuple& input, const FfvTuple& output,
                            ChoreId cstar);

}  // namespace chores
