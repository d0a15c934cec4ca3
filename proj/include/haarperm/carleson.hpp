#pragma once

#include "haarperm/budgets.hpp"
#include "haarperm/collection.hpp"
#include "haarperm/exponent.hpp"
#include "haarperm/permutation.hpp"
#include "haarperm/scalar.hpp"

#include <cstdint>
#include <functional>
#include <optional>

namespace haarperm {

/// How an extremal search over collections realizes its supremum.
///   Exact     enumerate every nonempty subset of the truncated tree;
///             requires 2^(interval count) within the subset budget.
///   Antichain enumerate only downward-saturated collections, one per
///             antichain; gives the same value for the Semyonov parameter.
///   Sampled   random collections; a reproducible lower bound.
enum class SearchMode { Exact, Antichain, Sampled };

struct SearchOptions {
    SearchMode mode = SearchMode::Exact;
    std::uint64_t seed = 0;       // Sampled only
    std::uint64_t trials = 0;     // Sampled only; 0 means budgets.sample_trials
    Budgets budgets{};
};

struct CarlesonResult {
    Scalar value;
    DyadicInterval witness;  // lexicographically smallest maximizing interval
};

/// max over I in B of (1/|I|^alpha) sum_{J in B, J subseteq I} |J|^alpha.
/// This is the Carleson constant for alpha = 1 and the Carleson p-constant
/// for alpha = 2/p - 1. Exact for integer alpha. Throws EmptyCollection.
Scalar carleson_constant(const IntervalCollection& collection,
                         const CarlesonExponent& exponent);
CarlesonResult carleson_constant_with_witness(const IntervalCollection& collection,
                                              const CarlesonExponent& exponent);

/// Same expression maximized over every interval of the truncated tree, not
/// just the members. Agrees with carleson_constant; kept as a second route
/// for the extended-supremum cross-checks.
Scalar carleson_constant_over_tree(const IntervalCollection& collection,
                                   const CarlesonExponent& exponent);

struct SemyonovResult {
    Scalar value;
    IntervalCollection witness;
    bool lower_bound_only;  // true for Sampled
};

/// The parameter K = sup over nonempty B of |pi^-1(B)*| / |B*|, realized as
/// a maximum at the permutation's depth. Exact and Antichain modes agree;
/// Sampled reports a lower bound (at least 1, from B = the whole tree).
SemyonovResult semyonov_parameter(const PermutationMap& map,
                                  const SearchOptions& options = {});

struct DistortionResult {
    Scalar value;
    IntervalCollection witness;
    bool lower_bound_only;
};

/// M(pi, alpha) = max over nonempty B of
///   max(CC_alpha(pi(B)) / CC_alpha(B), CC_alpha(B) / CC_alpha(pi(B))).
/// Symmetric in pi and pi^-1. Exact mode enumerates all subsets; Antichain
/// mode is not available here and falls back to Exact.
DistortionResult distortion(const PermutationMap& map, const CarlesonExponent& exponent,
                            const SearchOptions& options = {});

/// Number of antichains of the depth-d tree, empty antichain included:
/// f(0) = 2, f(d+1) = f(d)^2 + 1.
std::uint64_t antichain_count(int depth);

/// Streams every antichain exactly once (the empty one included), in a
/// deterministic order. Throws DepthTooLarge when antichain_count(depth)
/// exceeds budgets.max_antichains.
void for_each_antichain(int depth, const Budgets& budgets,
                        const std::function<void(const IntervalCollection&)>& fn);
std::vector<IntervalCollection> enumerate_antichains(int depth,
                                                     const Budgets& budgets = {});

}  // namespace haarperm
