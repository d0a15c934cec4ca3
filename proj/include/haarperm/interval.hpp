#pragma once

#include "haarperm/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace haarperm {

/// A dyadic interval [k 2^-n, (k+1) 2^-n) inside [0,1), identified by the
/// bit-address of the path from the root: "" is [0,1), "0" its left half,
/// "01" the right half of the left half, and so on.
///
/// Internally an interval is the 1-based heap index 2^level + address_value,
/// so parent/child moves are shifts and containment is a prefix test.
class DyadicInterval {
  public:
    static constexpr int kMaxLevel = 30;

    DyadicInterval() : idx_(1) {}  // the unit interval

    static DyadicInterval root() { return DyadicInterval(); }
    static DyadicInterval from_index(std::uint32_t heap_index);
    /// Accepts a bare bit string; the token "root" is an alias for "".
    static DyadicInterval from_address(std::string_view address);

    std::uint32_t index() const noexcept { return idx_; }
    int level() const noexcept;
    /// Exact measure 2^-level.
    Rational measure() const { return pow2(-level()); }

    std::string address() const;
    /// Address with "" rendered as "root"; the form used in files and reports.
    std::string token() const;

    bool is_root() const noexcept { return idx_ == 1; }
    DyadicInterval parent() const;  // requires !is_root()
    DyadicInterval left_child() const;
    DyadicInterval right_child() const;

    /// True iff other lies inside this interval (prefix test, reflexive).
    bool contains(const DyadicInterval& other) const noexcept {
        const int d = other.level() - level();
        return d >= 0 && (other.idx_ >> d) == idx_;
    }

    /// Key realizing lexicographic address order (a proper prefix sorts
    /// before its extensions). This is the iteration order of collections.
    std::uint64_t lex_key() const noexcept;

    friend bool operator==(const DyadicInterval& a, const DyadicInterval& b) {
        return a.idx_ == b.idx_;
    }
    friend std::strong_ordering operator<=>(const DyadicInterval& a,
                                            const DyadicInterval& b) {
        return a.lex_key() <=> b.lex_key();
    }

  private:
    explicit DyadicInterval(std::uint32_t idx) : idx_(idx) {}
    std::uint32_t idx_;
};

/// The finite tree of all dyadic intervals of level <= depth.
struct TruncatedTree {
    explicit TruncatedTree(int depth);

    int depth;
    /// 2^(depth+1) - 1.
    std::uint32_t interval_count() const noexcept {
        return (std::uint32_t(1) << (depth + 1)) - 1;
    }
    /// All intervals in lexicographic address order.
    std::vector<DyadicInterval> intervals() const;
    /// All intervals in heap-index (breadth-first) order.
    std::vector<DyadicInterval> intervals_by_index() const;
};

bool contains(const DyadicInterval& outer, const DyadicInterval& inner);

}  // namespace haarperm
