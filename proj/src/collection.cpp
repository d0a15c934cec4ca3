#include "haarperm/collection.hpp"

#include "haarperm/errors.hpp"

#include <algorithm>

namespace haarperm {

namespace {

void validate_members(int depth_bound, const std::vector<DyadicInterval>& members) {
    if (depth_bound < 0 || depth_bound > DyadicInterval::kMaxLevel)
        raise(ErrorKind::InvalidArgument, "collection depth bound out of range");
    for (const auto& m : members)
        if (m.level() > depth_bound)
            raise(ErrorKind::InvalidArgument,
                  "member '" + m.token() + "' exceeds the depth bound");
}

void require_same_bound(const IntervalCollection& a, const IntervalCollection& b) {
    if (a.depth_bound() != b.depth_bound())
        raise(ErrorKind::DepthMismatch, "collections have different depth bounds");
}

}  // namespace

IntervalCollection::IntervalCollection(int depth_bound) : depth_bound_(depth_bound) {
    validate_members(depth_bound_, members_);
}

IntervalCollection::IntervalCollection(int depth_bound, std::vector<DyadicInterval> members)
    : depth_bound_(depth_bound), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    validate_members(depth_bound_, members_);
}

IntervalCollection::IntervalCollection(int depth_bound,
                                       std::initializer_list<const char*> addresses)
    : depth_bound_(depth_bound) {
    members_.reserve(addresses.size());
    for (const char* a : addresses) members_.push_back(DyadicInterval::from_address(a));
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    validate_members(depth_bound_, members_);
}

IntervalCollection IntervalCollection::from_sorted(int depth_bound,
                                                   std::vector<DyadicInterval> members) {
    IntervalCollection out(depth_bound);
    out.members_ = std::move(members);
    validate_members(depth_bound, out.members_);
    return out;
}

bool IntervalCollection::contains_member(const DyadicInterval& interval) const {
    return std::binary_search(members_.begin(), members_.end(), interval);
}

bool IntervalCollection::covers(const DyadicInterval& interval) const {
    // Walk the ancestor chain; cheaper than scanning for deep trees.
    DyadicInterval probe = interval;
    for (;;) {
        if (contains_member(probe)) return true;
        if (probe.is_root()) return false;
        probe = probe.parent();
    }
}

IntervalCollection IntervalCollection::set_union(const IntervalCollection& other) const {
    require_same_bound(*this, other);
    std::vector<DyadicInterval> out;
    out.reserve(size() + other.size());
    std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                   other.members_.end(), std::back_inserter(out));
    return from_sorted(depth_bound_, std::move(out));
}

IntervalCollection IntervalCollection::set_difference(const IntervalCollection& other) const {
    require_same_bound(*this, other);
    std::vector<DyadicInterval> out;
    std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out));
    return from_sorted(depth_bound_, std::move(out));
}

IntervalCollection IntervalCollection::set_intersection(const IntervalCollection& other) const {
    require_same_bound(*this, other);
    std::vector<DyadicInterval> out;
    std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                          other.members_.end(), std::back_inserter(out));
    return from_sorted(depth_bound_, std::move(out));
}

bool IntervalCollection::is_subset_of(const IntervalCollection& other) const {
    require_same_bound(*this, other);
    return std::includes(other.members_.begin(), other.members_.end(),
                         members_.begin(), members_.end());
}

bool IntervalCollection::lex_less(const IntervalCollection& a, const IntervalCollection& b) {
    return std::lexicographical_compare(a.members_.begin(), a.members_.end(),
                                        b.members_.begin(), b.members_.end());
}

std::vector<std::string> IntervalCollection::tokens() const {
    std::vector<std::string> out;
    out.reserve(members_.size());
    for (const auto& m : members_) out.push_back(m.token());
    return out;
}

IntervalCollection max_collection(const IntervalCollection& collection) {
    std::vector<DyadicInterval> out;
    for (const auto& m : collection) {
        bool dominated = false;
        DyadicInterval probe = m;
        while (!probe.is_root()) {
            probe = probe.parent();
            if (collection.contains_member(probe)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(m);
    }
    return IntervalCollection::from_sorted(collection.depth_bound(), std::move(out));
}

std::vector<IntervalCollection> generations(const IntervalCollection& collection) {
    std::vector<IntervalCollection> out;
    IntervalCollection rest = collection;
    while (!rest.empty()) {
        IntervalCollection layer = max_collection(rest);
        rest = rest.set_difference(layer);
        out.push_back(std::move(layer));
    }
    return out;
}

Rational covered_measure(const IntervalCollection& collection) {
    Rational total(0);
    for (const auto& m : max_collection(collection)) total += m.measure();
    return total;
}

IntervalCollection rooted_sub(const IntervalCollection& collection,
                              const DyadicInterval& root) {
    std::vector<DyadicInterval> out;
    for (const auto& m : collection)
        if (root.contains(m)) out.push_back(m);
    return IntervalCollection::from_sorted(collection.depth_bound(), std::move(out));
}

bool is_antichain(const IntervalCollection& collection) {
    // Sorted order puts an ancestor immediately before its first descendant.
    const auto& ms = collection.members();
    for (std::size_t i = 0; i + 1 < ms.size(); ++i)
        if (ms[i].contains(ms[i + 1])) return false;
    return true;
}

}  // namespace haarperm
