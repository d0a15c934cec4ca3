#include "haarperm/interval.hpp"

#include "haarperm/errors.hpp"

#include <algorithm>
#include <bit>

namespace haarperm {

int DyadicInterval::level() const noexcept {
    return std::bit_width(idx_) - 1;
}

DyadicInterval DyadicInterval::from_index(std::uint32_t heap_index) {
    if (heap_index == 0 || std::bit_width(heap_index) - 1 > kMaxLevel)
        raise(ErrorKind::InvalidArgument, "interval index out of range");
    return DyadicInterval(heap_index);
}

DyadicInterval DyadicInterval::from_address(std::string_view address) {
    if (address == "root") address = "";
    if (address.size() > std::size_t(kMaxLevel))
        raise(ErrorKind::InvalidArgument, "address longer than the supported depth");
    std::uint32_t idx = 1;
    for (char c : address) {
        if (c != '0' && c != '1')
            raise(ErrorKind::InvalidArgument,
                  "address must consist of '0'/'1' characters: '" + std::string(address) + "'");
        idx = (idx << 1) | std::uint32_t(c - '0');
    }
    return DyadicInterval(idx);
}

std::string DyadicInterval::address() const {
    const int n = level();
    std::string out(std::size_t(n), '0');
    for (int i = 0; i < n; ++i)
        out[std::size_t(i)] = char('0' + ((idx_ >> (n - 1 - i)) & 1u));
    return out;
}

std::string DyadicInterval::token() const {
    return is_root() ? std::string("root") : address();
}

DyadicInterval DyadicInterval::parent() const {
    if (is_root()) raise(ErrorKind::InvalidArgument, "the unit interval has no parent");
    return DyadicInterval(idx_ >> 1);
}

DyadicInterval DyadicInterval::left_child() const {
    if (level() >= kMaxLevel) raise(ErrorKind::InvalidArgument, "child below the supported depth");
    return DyadicInterval(idx_ << 1);
}

DyadicInterval DyadicInterval::right_child() const {
    if (level() >= kMaxLevel) raise(ErrorKind::InvalidArgument, "child below the supported depth");
    return DyadicInterval((idx_ << 1) | 1u);
}

std::uint64_t DyadicInterval::lex_key() const noexcept {
    const int n = level();
    const std::uint32_t bits = idx_ - (std::uint32_t(1) << n);  // address value
    // Left-align the address bits; a prefix then shares the high part and
    // wins the tie through the shorter level.
    const std::uint64_t aligned = n == 0 ? 0 : (std::uint64_t(bits) << (32 - n));
    return (aligned << 6) | std::uint64_t(n);
}

TruncatedTree::TruncatedTree(int d) : depth(d) {
    if (d < 0 || d > DyadicInterval::kMaxLevel - 1)
        raise(ErrorKind::InvalidArgument, "tree depth out of range");
}

std::vector<DyadicInterval> TruncatedTree::intervals() const {
    std::vector<DyadicInterval> out = intervals_by_index();
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DyadicInterval> TruncatedTree::intervals_by_index() const {
    std::vector<DyadicInterval> out;
    out.reserve(interval_count());
    for (std::uint32_t i = 1; i <= interval_count(); ++i)
        out.push_back(DyadicInterval::from_index(i));
    return out;
}

bool contains(const DyadicInterval& outer, const DyadicInterval& inner) {
    return outer.contains(inner);
}

}  // namespace haarperm
