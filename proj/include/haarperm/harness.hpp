#pragma once

#include "haarperm/budgets.hpp"
#include "haarperm/carleson.hpp"
#include "haarperm/decompose.hpp"
#include "haarperm/haar_ops.hpp"
#include "haarperm/permutation.hpp"
#include "haarperm/rng.hpp"
#include "haarperm/series.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace haarperm {

// ---------------------------------------------------------------------------
// Permutation generators
// ---------------------------------------------------------------------------

enum class GeneratorKind {
    Identity,
    LevelPreservingRandom,  // shuffles each level within itself
    TreeAutomorphism,       // recursive child swaps; containment-preserving
    SubtreeSwap,            // two single nodes, or two same-level subtrees
    RandomBijection,        // uniform permutation of all intervals
    AdversarialMassMover,   // deep intervals onto shallow ones
};

const char* generator_kind_name(GeneratorKind kind);
GeneratorKind generator_kind_from_name(const std::string& name);

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::Identity;
    int depth = 3;
    std::uint64_t seed = 0;
};

/// Deterministic in (kind, depth, seed); always a valid PermutationMap.
PermutationMap gen_permutation(const GeneratorSpec& spec);

// ---------------------------------------------------------------------------
// Random inputs
// ---------------------------------------------------------------------------

/// Coefficients are dyadic rationals k/2^10 in [-1, 1], zero with
/// probability 1/2, so squares and sums stay small exact rationals.
CoefficientSeries random_series(int depth, Normalization normalization,
                                const Rational& p, Rng& rng);
CoefficientSeries random_nonzero_series(int depth, Normalization normalization,
                                        const Rational& p, Rng& rng);
CoefficientSeries random_series_for(const CarlesonExponent& exponent, int depth, Rng& rng,
                                    bool nonzero);
IntervalCollection random_nonempty_collection(int depth, Rng& rng);

// ---------------------------------------------------------------------------
// Property checks
// ---------------------------------------------------------------------------

struct PropertyReport {
    std::string name;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    std::string witness;  // inputs of the first failure, empty when clean
    std::vector<std::pair<std::string, std::string>> stats;

    bool pass() const noexcept { return failures == 0; }
};

struct SuiteReport {
    std::vector<PropertyReport> properties;
    bool all_pass() const;
};

/// Norm chain for level-preserving maps: ||T x||^2 <= K ||x||^2 with the
/// exact Semyonov K, over random series plus (at depth <= 3) the indicator
/// series of every nonempty collection. Records the largest observed ratio.
PropertyReport theorem2_check(const PermutationMap& map, std::uint64_t trials,
                              std::uint64_t seed, const Budgets& budgets = {});

enum class NecessityFamily { ExhaustiveDepth3, Sampled };

/// Exact identity ||T indicator(B)||^2 = CC(pi(B)) per collection; the
/// maximal ratio CC(pi(B))/CC(B) is the reported distortion lower bound.
PropertyReport necessity_check(const PermutationMap& map, const CarlesonExponent& exponent,
                               NecessityFamily family, std::uint64_t trials,
                               std::uint64_t seed);

/// Full pipeline on random series for the map and its inverse: every
/// certificate must verify. Records the empirical norm ratio next to the
/// certified bound 3 M^2 K.
PropertyReport theorem34_suite(const PermutationMap& map, const CarlesonExponent& exponent,
                               std::uint64_t trials, std::uint64_t seed,
                               const Budgets& budgets = {});

/// pairing(T a, c) = pairing(a, S c) on random tuples, p in {1, 2/3, 1/2}.
PropertyReport transpose_identity_check(int depth, std::uint64_t trials, std::uint64_t seed);

/// Brute-force sup over all nonempty collections of the BMO expression
/// equals the rooted-max norm (depth <= 3).
PropertyReport oracle_bmo_sup_check(int depth, std::uint64_t trials, std::uint64_t seed);
/// Carleson max over members equals the max over the whole tree.
PropertyReport oracle_index_set_check(int depth, std::uint64_t trials, std::uint64_t seed);
/// covered_measure equals a leaf-cell marking oracle.
PropertyReport oracle_covered_measure_check(int depth, std::uint64_t trials,
                                            std::uint64_t seed);
/// The p = 1 Carleson p-constant equals the alpha = 1 Carleson constant.
PropertyReport cc_p1_check(int depth, std::uint64_t trials, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Suite runner
// ---------------------------------------------------------------------------

struct SuiteConfig {
    int depth = 3;
    std::uint64_t seed = 42;
    std::uint64_t trials = 50;
    std::vector<std::string> checks = {"theorem2",  "necessity", "theorem34",
                                       "transpose", "oracles",   "cc_p1"};
    Budgets budgets{};

    static SuiteConfig from_json_text(const std::string& text);
};

SuiteReport run_suite(const SuiteConfig& config);
std::string suite_report_to_json_text(const SuiteReport& report);

}  // namespace haarperm
