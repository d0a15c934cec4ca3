#include "haarperm/scan.hpp"

#include "haarperm/errors.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <numeric>

namespace haarperm::scan {

int compare(const Fraction& a, const Fraction& b) {
    const __int128 lhs = __int128(a.num) * b.den;
    const __int128 rhs = __int128(b.num) * a.den;
    if (lhs < rhs) return -1;
    if (rhs < lhs) return 1;
    return 0;
}

Fraction ratio(const Fraction& a, const Fraction& b) {
    assert(b.num > 0);
    const __int128 num = __int128(a.num) * b.den;
    const __int128 den = __int128(a.den) * b.num;
    assert(num <= INT64_MAX && den <= INT64_MAX);
    return Fraction{std::int64_t(num), std::int64_t(den)};
}

DenseTree::DenseTree(int d) : depth(d) {
    if (d < 0 || d > 6)
        raise(ErrorKind::DepthTooLarge,
              "exhaustive scans support depth <= 6 (got " + std::to_string(d) + ")");
    count = (std::uint32_t(1) << (depth + 1)) - 1;
    level.assign(count + 1, 0);
    leaf.assign(count + 1, 0);
    for (std::uint32_t i = 1; i <= count; ++i) {
        const int lvl = std::bit_width(i) - 1;
        level[i] = lvl;
        const int span = depth - lvl;  // leaves below i: 2^span cells
        const std::uint64_t first = (std::uint64_t(i) << span) - (std::uint64_t(1) << depth);
        const std::uint64_t width = std::uint64_t(1) << span;
        leaf[i] = ((width == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << width) - 1)) << first;
    }
    lex_order.resize(count);
    std::iota(lex_order.begin(), lex_order.end(), 1u);
    std::sort(lex_order.begin(), lex_order.end(), [](std::uint32_t a, std::uint32_t b) {
        return DyadicInterval::from_index(a).lex_key() < DyadicInterval::from_index(b).lex_key();
    });
}

std::uint64_t DenseTree::mask_of(const IntervalCollection& collection) const {
    std::uint64_t mask = 0;
    for (const auto& m : collection) {
        if (m.level() > depth)
            raise(ErrorKind::DepthMismatch, "collection member deeper than the scan tree");
        mask |= mask_bit(m.index());
    }
    return mask;
}

IntervalCollection DenseTree::collection_of(std::uint64_t mask) const {
    std::vector<DyadicInterval> members;
    for (std::uint64_t m = mask; m != 0; m &= m - 1)
        members.push_back(DyadicInterval::from_index(std::uint32_t(std::countr_zero(m)) + 1));
    return IntervalCollection(depth, std::move(members));
}

std::uint64_t DenseTree::image_mask(const PermutationMap& map, std::uint64_t mask) const {
    std::uint64_t out = 0;
    for (std::uint64_t m = mask; m != 0; m &= m - 1)
        out |= mask_bit(map.apply_index(std::uint32_t(std::countr_zero(m)) + 1));
    return out;
}

std::uint64_t DenseTree::preimage_mask(const PermutationMap& map, std::uint64_t mask) const {
    std::uint64_t out = 0;
    for (std::uint64_t m = mask; m != 0; m &= m - 1)
        out |= mask_bit(map.apply_inverse_index(std::uint32_t(std::countr_zero(m)) + 1));
    return out;
}

int DenseTree::covered_cells(std::uint64_t mask) const {
    std::uint64_t cells = 0;
    for (std::uint64_t m = mask; m != 0; m &= m - 1)
        cells |= leaf[std::uint32_t(std::countr_zero(m)) + 1];
    return std::popcount(cells);
}

bool DenseTree::mask_lex_less(std::uint64_t a, std::uint64_t b) const {
    if (a == b) return false;
    for (std::size_t r = 0; r < lex_order.size(); ++r) {
        const std::uint64_t bit = mask_bit(lex_order[r]);
        const bool in_a = (a & bit) != 0;
        const bool in_b = (b & bit) != 0;
        if (in_a == in_b) continue;
        // First divergence. The side holding this interval compares smaller
        // unless the other side has nothing left (then it is a proper prefix).
        std::uint64_t rest = 0;
        for (std::size_t s = r + 1; s < lex_order.size(); ++s) rest |= mask_bit(lex_order[s]);
        if (in_a) return (b & rest) != 0;
        return (a & rest) == 0;
    }
    return false;
}

IntWeights::IntWeights(const DenseTree& tree, long a) : alpha(a) {
    if (a < 1) raise(ErrorKind::InvalidArgument, "alpha must be >= 1");
    if (long(tree.depth) * a > 40)
        raise(ErrorKind::DepthTooLarge, "depth * alpha too large for the integer scan");
    w.assign(tree.count + 1, 0);
    for (std::uint32_t i = 1; i <= tree.count; ++i)
        w[i] = std::int64_t(1) << ((tree.depth - tree.level[i]) * a);
}

DblWeights::DblWeights(const DenseTree& tree, double a) : alpha(a) {
    w.assign(tree.count + 1, 0.0);
    for (std::uint32_t i = 1; i <= tree.count; ++i)
        w[i] = std::exp2(-double(tree.level[i]) * a);
}

namespace {

template <class W, class T>
void subtree_sums_impl(const DenseTree& tree, const W& weights, std::uint64_t mask,
                       std::span<T> t) {
    assert(t.size() == std::size_t(tree.count) + 1);
    for (std::uint32_t i = tree.count; i >= 1; --i) {
        T acc = (mask >> (i - 1)) & 1u ? T(weights.w[i]) : T(0);
        const std::uint32_t l = 2 * i;
        if (l + 1 <= tree.count) acc += t[l] + t[l + 1];
        t[i] = acc;
    }
}

}  // namespace

void subtree_sums(const DenseTree& tree, const IntWeights& weights, std::uint64_t mask,
                  std::span<std::int64_t> t) {
    subtree_sums_impl(tree, weights, mask, t);
}

void subtree_sums(const DenseTree& tree, const DblWeights& weights, std::uint64_t mask,
                  std::span<double> t) {
    subtree_sums_impl(tree, weights, mask, t);
}

Fraction rooted_max_over_all(const DenseTree& tree, const IntWeights& weights,
                             std::span<const std::int64_t> t) {
    Fraction best{0, 1};
    for (std::uint32_t i = 1; i <= tree.count; ++i) {
        const Fraction candidate{t[i], weights.w[i]};
        if (compare(candidate, best) > 0) best = candidate;
    }
    return best;
}

Fraction rooted_max_over_members(const DenseTree& tree, const IntWeights& weights,
                                 std::uint64_t mask, std::span<const std::int64_t> t) {
    Fraction best{0, 1};
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
        const std::uint32_t i = std::uint32_t(std::countr_zero(m)) + 1;
        const Fraction candidate{t[i], weights.w[i]};
        if (compare(candidate, best) > 0) best = candidate;
    }
    return best;
}

double rooted_max_over_all(const DenseTree& tree, const DblWeights& weights,
                           std::span<const double> t) {
    double best = 0.0;
    for (std::uint32_t i = 1; i <= tree.count; ++i)
        best = std::max(best, t[i] / weights.w[i]);
    return best;
}

double rooted_max_over_members(const DenseTree& tree, const DblWeights& weights,
                               std::uint64_t mask, std::span<const double> t) {
    double best = 0.0;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
        const std::uint32_t i = std::uint32_t(std::countr_zero(m)) + 1;
        best = std::max(best, t[i] / weights.w[i]);
    }
    return best;
}

Fraction carleson_fraction(const DenseTree& tree, const IntWeights& weights,
                           std::uint64_t mask) {
    std::vector<std::int64_t> t(tree.count + 1);
    subtree_sums(tree, weights, mask, t);
    return rooted_max_over_members(tree, weights, mask, t);
}

double carleson_double(const DenseTree& tree, const DblWeights& weights, std::uint64_t mask) {
    std::vector<double> t(tree.count + 1);
    subtree_sums(tree, weights, mask, t);
    return rooted_max_over_members(tree, weights, mask, t);
}

std::uint64_t antichain_count(int depth) {
    std::uint64_t f = 2;
    for (int d = 0; d < depth; ++d) {
        if (f > std::uint64_t(0xFFFFFFFF)) return ~std::uint64_t(0);  // saturate
        f = f * f + 1;
    }
    return f;
}

namespace {

void antichain_rec(std::uint32_t node, std::uint32_t count, std::uint64_t& mask,
                   const std::function<void()>& k) {
    mask |= std::uint64_t(1) << (node - 1);
    k();
    mask &= ~(std::uint64_t(1) << (node - 1));
    if (2 * node > count) {
        k();  // leaf skipped: contributes the empty choice
    } else {
        antichain_rec(2 * node, count, mask,
                      [&] { antichain_rec(2 * node + 1, count, mask, k); });
    }
}

}  // namespace

void for_each_antichain_mask(int depth, const std::function<void(std::uint64_t)>& fn) {
    if (depth < 0 || depth > 5)
        raise(ErrorKind::DepthTooLarge, "antichain masks support depth <= 5");
    const std::uint32_t count = (std::uint32_t(1) << (depth + 1)) - 1;
    std::uint64_t mask = 0;
    antichain_rec(1, count, mask, [&] { fn(mask); });
}

}  // namespace haarperm::scan
