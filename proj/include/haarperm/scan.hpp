#pragma once

#include "haarperm/budgets.hpp"
#include "haarperm/collection.hpp"
#include "haarperm/exponent.hpp"
#include "haarperm/interval.hpp"
#include "haarperm/permutation.hpp"
#include "haarperm/scalar.hpp"

#include <cstdint>
#include <functional>
#include <future>
#include <span>
#include <vector>

namespace haarperm::scan {

// Exhaustive searches over all subsets of a shallow tree run on machine
// integers: with depth <= 6 every covered set is a mask over the 2^depth
// leaf cells, and with depth * alpha <= 40 every weight 2^((depth-level)
// * alpha) fits comfortably in 64 bits. Comparisons cross-multiply in
// 128 bits, so every value produced here is exact. The rational front-end
// in carleson.cpp converts results back to Scalar.

/// num/den with den > 0, compared exactly by cross multiplication.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational to_rational() const { return Rational(num, den); }
};

int compare(const Fraction& a, const Fraction& b);
inline bool operator<(const Fraction& a, const Fraction& b) { return compare(a, b) < 0; }
inline bool operator==(const Fraction& a, const Fraction& b) { return compare(a, b) == 0; }

/// Fraction of two fractions, (a/b) / (c/d), still exact in 64 bits for the
/// magnitudes reachable here.
Fraction ratio(const Fraction& a, const Fraction& b);

/// Dense index structures for one truncated tree. Subsets of intervals are
/// bitmasks with bit (heap_index - 1).
struct DenseTree {
    explicit DenseTree(int depth);  // requires depth <= 6

    int depth;
    std::uint32_t count;                    // 2^(depth+1) - 1
    std::vector<int> level;                 // heap index -> level
    std::vector<std::uint64_t> leaf;        // heap index -> covered leaf cells
    std::vector<std::uint32_t> lex_order;   // lexicographic rank -> heap index

    std::uint64_t mask_bit(std::uint32_t heap_index) const {
        return std::uint64_t(1) << (heap_index - 1);
    }
    std::uint64_t mask_of(const IntervalCollection& collection) const;
    IntervalCollection collection_of(std::uint64_t mask) const;
    std::uint64_t image_mask(const PermutationMap& map, std::uint64_t mask) const;
    std::uint64_t preimage_mask(const PermutationMap& map, std::uint64_t mask) const;

    /// Covered-measure numerator: number of leaf cells under the members.
    int covered_cells(std::uint64_t mask) const;

    /// Collection order used for witness tie-breaking (sequence order of the
    /// sorted member lists).
    bool mask_lex_less(std::uint64_t a, std::uint64_t b) const;
};

/// Integer weights w[i] = 2^((depth - level(i)) * alpha) = |I|^alpha scaled
/// by 2^(depth * alpha), for integer alpha with depth * alpha <= 40.
struct IntWeights {
    IntWeights(const DenseTree& tree, long alpha);
    long alpha;
    std::vector<std::int64_t> w;
};

/// Double weights |I|^alpha for non-integer alpha.
struct DblWeights {
    DblWeights(const DenseTree& tree, double alpha);
    double alpha;
    std::vector<double> w;
};

/// t[i] = sum of w over the members of mask inside the subtree of i, for
/// every interval i. t must have count + 1 slots.
void subtree_sums(const DenseTree& tree, const IntWeights& weights,
                  std::uint64_t mask, std::span<std::int64_t> t);
void subtree_sums(const DenseTree& tree, const DblWeights& weights,
                  std::uint64_t mask, std::span<double> t);

/// max over all intervals i of t[i] / w[i] (the rooted norm-style maximum;
/// zero mask gives 0/1).
Fraction rooted_max_over_all(const DenseTree& tree, const IntWeights& weights,
                             std::span<const std::int64_t> t);
/// max over the members of mask only (the Carleson-constant index set).
Fraction rooted_max_over_members(const DenseTree& tree, const IntWeights& weights,
                                 std::uint64_t mask, std::span<const std::int64_t> t);
double rooted_max_over_all(const DenseTree& tree, const DblWeights& weights,
                           std::span<const double> t);
double rooted_max_over_members(const DenseTree& tree, const DblWeights& weights,
                               std::uint64_t mask, std::span<const double> t);

/// Carleson constant of a subset as an exact fraction (mask must be nonempty).
Fraction carleson_fraction(const DenseTree& tree, const IntWeights& weights,
                           std::uint64_t mask);
double carleson_double(const DenseTree& tree, const DblWeights& weights,
                       std::uint64_t mask);

/// Antichain enumeration. Counts follow f(0) = 2, f(d+1) = f(d)^2 + 1
/// (including the empty antichain); the count saturates at uint64 max.
std::uint64_t antichain_count(int depth);
/// Calls fn for every antichain of the depth-d tree exactly once, as a
/// subset mask. Requires depth <= 5 so masks fit. No budget check here;
/// callers gate on antichain_count first.
void for_each_antichain_mask(int depth, const std::function<void(std::uint64_t)>& fn);

/// Splits [begin, end) into chunks, evaluates chunk(first, last) possibly in
/// parallel, and folds the results with combine in chunk order. Determinism
/// does not depend on the worker count.
template <class R, class ChunkFn, class CombineFn>
R chunked_reduce(std::uint64_t begin, std::uint64_t end, unsigned workers, R init,
                 ChunkFn chunk, CombineFn combine) {
    if (begin >= end) return init;
    const std::uint64_t span = end - begin;
    if (workers <= 1 || span < 1024) return combine(std::move(init), chunk(begin, end));
    const std::uint64_t pieces = std::min<std::uint64_t>(workers, span);
    std::vector<std::future<R>> futures;
    futures.reserve(pieces);
    for (std::uint64_t k = 0; k < pieces; ++k) {
        const std::uint64_t lo = begin + span * k / pieces;
        const std::uint64_t hi = begin + span * (k + 1) / pieces;
        futures.push_back(std::async(std::launch::async,
                                     [&chunk, lo, hi] { return chunk(lo, hi); }));
    }
    R acc = std::move(init);
    for (auto& f : futures) acc = combine(std::move(acc), f.get());
    return acc;
}

}  // namespace haarperm::scan
