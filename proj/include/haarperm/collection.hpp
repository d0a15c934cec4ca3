#pragma once

#include "haarperm/interval.hpp"
#include "haarperm/rational.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace haarperm {

/// A finite set of dyadic intervals of level <= depth_bound. Members are
/// kept sorted in lexicographic address order and iterate that way, so any
/// fold over a collection is reproducible.
class IntervalCollection {
  public:
    explicit IntervalCollection(int depth_bound);
    IntervalCollection(int depth_bound, std::vector<DyadicInterval> members);
    IntervalCollection(int depth_bound, std::initializer_list<const char*> addresses);

    /// Trusted constructor for already-sorted, duplicate-free input.
    static IntervalCollection from_sorted(int depth_bound,
                                          std::vector<DyadicInterval> members);

    int depth_bound() const noexcept { return depth_bound_; }
    bool empty() const noexcept { return members_.empty(); }
    std::size_t size() const noexcept { return members_.size(); }
    const std::vector<DyadicInterval>& members() const noexcept { return members_; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    bool contains_member(const DyadicInterval& interval) const;
    /// True iff some member contains the interval (pointset membership of
    /// the interval inside the covered set, for dyadic arguments).
    bool covers(const DyadicInterval& interval) const;

    IntervalCollection set_union(const IntervalCollection& other) const;
    IntervalCollection set_difference(const IntervalCollection& other) const;
    IntervalCollection set_intersection(const IntervalCollection& other) const;
    bool is_subset_of(const IntervalCollection& other) const;

    friend bool operator==(const IntervalCollection&, const IntervalCollection&) = default;

    /// Sequence comparison in member order; a proper prefix sorts first.
    /// Used to break ties between extremal witnesses.
    static bool lex_less(const IntervalCollection& a, const IntervalCollection& b);

    std::vector<std::string> tokens() const;

  private:
    int depth_bound_;
    std::vector<DyadicInterval> members_;
};

/// The inclusion-maximal members; always a pairwise-disjoint antichain
/// covering the same pointset.
IntervalCollection max_collection(const IntervalCollection& collection);

/// Iterated maximal layers: G_0 = max(B), G_{l+1} = max(B minus the earlier
/// layers), until nothing is left. The layers partition the collection.
std::vector<IntervalCollection> generations(const IntervalCollection& collection);

/// Lebesgue measure of the union of the members, as an exact rational.
/// Maximal members are pairwise disjoint, so this is the sum of their
/// measures. Empty collections cover measure zero.
Rational covered_measure(const IntervalCollection& collection);

/// The members contained in root.
IntervalCollection rooted_sub(const IntervalCollection& collection,
                              const DyadicInterval& root);

bool is_antichain(const IntervalCollection& collection);

}  // namespace haarperm
