#include "haarperm/carleson.hpp"

#include "haarperm/errors.hpp"
#include "haarperm/rng.hpp"
#include "haarperm/scan.hpp"

#include <algorithm>
#include <vector>

namespace haarperm {

namespace {

Scalar rooted_sum(const IntervalCollection& collection, const DyadicInterval& root,
                  const CarlesonExponent& exponent) {
    Scalar sum(0);
    for (const auto& member : collection)
        if (root.contains(member)) sum += exponent.measure_weight(member);
    return sum;
}

bool alpha_fits_int_scan(const CarlesonExponent& exponent, int depth) {
    if (!exponent.exact()) return false;
    const long a = exponent.alpha().convert_to<long>();
    return long(depth) * a <= 18;  // keeps cross-multiplied ratios in 64 bits
}

void check_subset_budget(int depth, const Budgets& budgets) {
    const std::uint32_t count = (std::uint32_t(1) << (depth + 1)) - 1;
    if (count > 40 || (std::uint64_t(1) << count) > budgets.max_subsets)
        raise(ErrorKind::DepthTooLarge,
              "exact enumeration needs 2^" + std::to_string(count) +
                  " subsets, over the budget of " + std::to_string(budgets.max_subsets) +
                  " (HAARPERM_MAX_SUBSETS)");
}

IntervalCollection random_nonempty_collection(Rng& rng, int depth) {
    const TruncatedTree tree(depth);
    std::vector<DyadicInterval> members;
    for (;;) {
        members.clear();
        for (const auto& interval : tree.intervals())
            if (rng.coin()) members.push_back(interval);
        if (!members.empty()) break;
    }
    return IntervalCollection(depth, std::move(members));
}

}  // namespace

Scalar carleson_constant(const IntervalCollection& collection,
                         const CarlesonExponent& exponent) {
    return carleson_constant_with_witness(collection, exponent).value;
}

CarlesonResult carleson_constant_with_witness(const IntervalCollection& collection,
                                              const CarlesonExponent& exponent) {
    if (collection.empty())
        raise(ErrorKind::EmptyCollection, "Carleson constant of the empty collection");
    Scalar best(0);
    DyadicInterval witness = collection.members().front();
    for (const auto& candidate : collection) {
        const Scalar value =
            rooted_sum(collection, candidate, exponent) / exponent.measure_weight(candidate);
        if (value > best) {
            best = value;
            witness = candidate;
        }
    }
    return {best, witness};
}

Scalar carleson_constant_over_tree(const IntervalCollection& collection,
                                   const CarlesonExponent& exponent) {
    if (collection.empty())
        raise(ErrorKind::EmptyCollection, "Carleson constant of the empty collection");
    Scalar best(0);
    for (const auto& candidate : TruncatedTree(collection.depth_bound()).intervals()) {
        const Scalar value =
            rooted_sum(collection, candidate, exponent) / exponent.measure_weight(candidate);
        best = max(best, value);
    }
    return best;
}

// ---------------------------------------------------------------------------
// Semyonov parameter
// ---------------------------------------------------------------------------

namespace {

struct MaskBest {
    scan::Fraction value{0, 1};
    std::uint64_t witness = 0;
};

MaskBest better(const scan::DenseTree& tree, MaskBest a, const MaskBest& b) {
    const int c = scan::compare(b.value, a.value);
    if (c > 0 || (c == 0 && b.witness != 0 &&
                  (a.witness == 0 || tree.mask_lex_less(b.witness, a.witness))))
        return b;
    return a;
}

SemyonovResult semyonov_exact(const PermutationMap& map, const Budgets& budgets) {
    check_subset_budget(map.depth(), budgets);
    const scan::DenseTree tree(map.depth());
    // Per-interval leaf cover of the preimage, so each subset costs one OR
    // per member.
    std::vector<std::uint64_t> pre_leaf(tree.count + 1, 0);
    for (std::uint32_t i = 1; i <= tree.count; ++i)
        pre_leaf[i] = tree.leaf[map.apply_inverse_index(i)];

    const std::uint64_t total = std::uint64_t(1) << tree.count;
    auto chunk = [&](std::uint64_t lo, std::uint64_t hi) {
        MaskBest best;
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            if (mask == 0) continue;
            std::uint64_t fwd = 0;
            std::uint64_t pre = 0;
            for (std::uint64_t m = mask; m != 0; m &= m - 1) {
                const std::uint32_t i = std::uint32_t(std::countr_zero(m)) + 1;
                fwd |= tree.leaf[i];
                pre |= pre_leaf[i];
            }
            const scan::Fraction ratio{std::popcount(pre), std::popcount(fwd)};
            best = better(tree, best, MaskBest{ratio, mask});
        }
        return best;
    };
    const MaskBest best =
        scan::chunked_reduce(std::uint64_t(1), total, budgets.workers, MaskBest{}, chunk,
                             [&](MaskBest a, MaskBest b) { return better(tree, a, b); });
    return {Scalar(best.value.to_rational()), tree.collection_of(best.witness), false};
}

SemyonovResult semyonov_antichain(const PermutationMap& map, const Budgets& budgets) {
    const std::uint64_t count = antichain_count(map.depth());
    if (count > budgets.max_antichains)
        raise(ErrorKind::DepthTooLarge,
              "antichain enumeration needs " + std::to_string(count) +
                  " antichains, over the budget of " + std::to_string(budgets.max_antichains) +
                  " (HAARPERM_MAX_ANTICHAINS)");
    const scan::DenseTree tree(map.depth());
    std::vector<std::uint64_t> pre_leaf(tree.count + 1, 0);
    for (std::uint32_t i = 1; i <= tree.count; ++i)
        pre_leaf[i] = tree.leaf[map.apply_inverse_index(i)];

    MaskBest best;
    scan::for_each_antichain_mask(map.depth(), [&](std::uint64_t antichain) {
        if (antichain == 0) return;
        // Saturate: take every interval covered by the antichain's pointset.
        std::uint64_t cover = 0;
        for (std::uint64_t m = antichain; m != 0; m &= m - 1)
            cover |= tree.leaf[std::uint32_t(std::countr_zero(m)) + 1];
        std::uint64_t saturated = 0;
        std::uint64_t pre = 0;
        for (std::uint32_t i = 1; i <= tree.count; ++i) {
            if ((tree.leaf[i] & ~cover) == 0) {
                saturated |= tree.mask_bit(i);
                pre |= pre_leaf[i];
            }
        }
        const scan::Fraction ratio{std::popcount(pre), std::popcount(cover)};
        best = better(tree, best, MaskBest{ratio, saturated});
    });
    return {Scalar(best.value.to_rational()), tree.collection_of(best.witness), false};
}

SemyonovResult semyonov_sampled(const PermutationMap& map, const SearchOptions& options) {
    const std::uint64_t trials =
        options.trials != 0 ? options.trials : options.budgets.sample_trials;
    // Baseline B = the whole tree: pi^-1(B) = B, ratio exactly 1.
    const TruncatedTree whole(map.depth());
    IntervalCollection full(map.depth(), whole.intervals());
    Scalar best(1);
    IntervalCollection witness = full;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(options.seed, 0x5eed0001, t));
        const IntervalCollection sample = random_nonempty_collection(rng, map.depth());
        const Rational denom = covered_measure(sample);
        const Rational numer = covered_measure(map.preimage(sample));
        const Scalar ratio = Scalar(numer) / Scalar(denom);
        if (ratio > best || (ratio == best && IntervalCollection::lex_less(sample, witness))) {
            best = ratio;
            witness = sample;
        }
    }
    return {best, witness, true};
}

}  // namespace

SemyonovResult semyonov_parameter(const PermutationMap& map, const SearchOptions& options) {
    switch (options.mode) {
        case SearchMode::Exact: return semyonov_exact(map, options.budgets);
        case SearchMode::Antichain: return semyonov_antichain(map, options.budgets);
        case SearchMode::Sampled: return semyonov_sampled(map, options);
    }
    raise(ErrorKind::InvalidArgument, "unknown search mode");
}

// ---------------------------------------------------------------------------
// Distortion
// ---------------------------------------------------------------------------

namespace {

DistortionResult distortion_exact_int(const PermutationMap& map,
                                      const CarlesonExponent& exponent,
                                      const Budgets& budgets) {
    const scan::DenseTree tree(map.depth());
    const scan::IntWeights weights(tree, exponent.alpha().convert_to<long>());
    const std::uint64_t total = std::uint64_t(1) << tree.count;

    struct Best {
        scan::Fraction value{0, 1};
        std::uint64_t witness = 0;  // 0 means unset
    };
    auto combine = [&](Best a, Best b) {
        if (b.witness == 0) return a;
        if (a.witness == 0) return b;
        const int c = scan::compare(b.value, a.value);
        if (c > 0 || (c == 0 && tree.mask_lex_less(b.witness, a.witness))) return b;
        return a;
    };
    auto chunk = [&](std::uint64_t lo, std::uint64_t hi) {
        Best best;
        std::vector<std::int64_t> t(tree.count + 1);
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            if (mask == 0) continue;
            subtree_sums(tree, weights, mask, t);
            const scan::Fraction cc = rooted_max_over_members(tree, weights, mask, t);
            const std::uint64_t image = tree.image_mask(map, mask);
            subtree_sums(tree, weights, image, t);
            const scan::Fraction cc_image = rooted_max_over_members(tree, weights, image, t);
            scan::Fraction r = scan::ratio(cc_image, cc);
            const scan::Fraction r_back = scan::ratio(cc, cc_image);
            if (scan::compare(r_back, r) > 0) r = r_back;
            best = combine(best, Best{r, mask});
        }
        return best;
    };
    const Best best =
        scan::chunked_reduce(std::uint64_t(1), total, budgets.workers, Best{}, chunk, combine);
    return {Scalar(best.value.to_rational()), tree.collection_of(best.witness), false};
}

DistortionResult distortion_exact_general(const PermutationMap& map,
                                          const CarlesonExponent& exponent,
                                          const Budgets& budgets) {
    // Non-integer alpha (double weights) or weights too wide for the integer
    // scan: same enumeration, Scalar arithmetic.
    const scan::DenseTree tree(map.depth());
    const std::uint64_t total = std::uint64_t(1) << tree.count;
    Scalar best(0);
    std::uint64_t witness = 0;  // 0 means unset
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        const IntervalCollection collection = tree.collection_of(mask);
        const Scalar cc = carleson_constant(collection, exponent);
        const Scalar cc_image = carleson_constant(map.image(collection), exponent);
        const Scalar r = max(cc_image / cc, cc / cc_image);
        if (witness == 0 || r > best ||
            (r == best && tree.mask_lex_less(mask, witness))) {
            best = r;
            witness = mask;
        }
    }
    return {best, tree.collection_of(witness), false};
}

DistortionResult distortion_sampled(const PermutationMap& map,
                                    const CarlesonExponent& exponent,
                                    const SearchOptions& options) {
    const std::uint64_t trials =
        options.trials != 0 ? options.trials : options.budgets.sample_trials;
    const TruncatedTree whole(map.depth());
    IntervalCollection witness(map.depth(), whole.intervals());
    Scalar best(1);  // B = whole tree maps to itself, ratio 1
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(options.seed, 0x5eed0002, t));
        const IntervalCollection sample = random_nonempty_collection(rng, map.depth());
        const Scalar cc = carleson_constant(sample, exponent);
        const Scalar cc_image = carleson_constant(map.image(sample), exponent);
        const Scalar r = max(cc_image / cc, cc / cc_image);
        if (r > best || (r == best && IntervalCollection::lex_less(sample, witness))) {
            best = r;
            witness = sample;
        }
    }
    return {best, witness, true};
}

}  // namespace

DistortionResult distortion(const PermutationMap& map, const CarlesonExponent& exponent,
                            const SearchOptions& options) {
    switch (options.mode) {
        case SearchMode::Exact:
        case SearchMode::Antichain:  // no antichain reduction for distortion
            check_subset_budget(map.depth(), options.budgets);
            if (alpha_fits_int_scan(exponent, map.depth()))
                return distortion_exact_int(map, exponent, options.budgets);
            return distortion_exact_general(map, exponent, options.budgets);
        case SearchMode::Sampled: return distortion_sampled(map, exponent, options);
    }
    raise(ErrorKind::InvalidArgument, "unknown search mode");
}

// ---------------------------------------------------------------------------
// Antichain enumeration (public surface)
// ---------------------------------------------------------------------------

std::uint64_t antichain_count(int depth) { return scan::antichain_count(depth); }

void for_each_antichain(int depth, const Budgets& budgets,
                        const std::function<void(const IntervalCollection&)>& fn) {
    const std::uint64_t count = antichain_count(depth);
    if (count > budgets.max_antichains)
        raise(ErrorKind::DepthTooLarge,
              "depth " + std::to_string(depth) + " has " + std::to_string(count) +
                  " antichains, over the budget of " + std::to_string(budgets.max_antichains) +
                  " (HAARPERM_MAX_ANTICHAINS)");
    const scan::DenseTree tree(depth);
    scan::for_each_antichain_mask(depth,
                                  [&](std::uint64_t mask) { fn(tree.collection_of(mask)); });
}

std::vector<IntervalCollection> enumerate_antichains(int depth, const Budgets& budgets) {
    std::vector<IntervalCollection> out;
    for_each_antichain(depth, budgets,
                       [&](const IntervalCollection& a) { out.push_back(a); });
    return out;
}

}  // namespace haarperm
