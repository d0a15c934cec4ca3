#pragma once

#include "haarperm/collection.hpp"
#include "haarperm/interval.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace haarperm {

/// A bijection of the 2^(depth+1) - 1 intervals of level <= depth onto
/// themselves, together with its inverse. Immutable once built.
class PermutationMap {
  public:
    /// forward[i] is the image of the interval with heap index i; slot 0 is
    /// unused. Validates that the map is a depth-closed bijection.
    PermutationMap(int depth, std::vector<std::uint32_t> forward);

    static PermutationMap identity(int depth);

    int depth() const noexcept { return depth_; }
    std::uint32_t interval_count() const noexcept {
        return (std::uint32_t(1) << (depth_ + 1)) - 1;
    }

    DyadicInterval apply(const DyadicInterval& interval) const;
    DyadicInterval apply_inverse(const DyadicInterval& interval) const;
    std::uint32_t apply_index(std::uint32_t idx) const { return forward_[idx]; }
    std::uint32_t apply_inverse_index(std::uint32_t idx) const { return inverse_[idx]; }

    /// Memberwise image pi(B) and preimage pi^-1(B).
    IntervalCollection image(const IntervalCollection& collection) const;
    IntervalCollection preimage(const IntervalCollection& collection) const;

    PermutationMap inverse() const;
    /// (*this) after other: result(I) = this(other(I)).
    PermutationMap compose(const PermutationMap& other) const;

    bool is_identity() const;
    friend bool operator==(const PermutationMap&, const PermutationMap&) = default;

  private:
    int depth_;
    std::vector<std::uint32_t> forward_;
    std::vector<std::uint32_t> inverse_;
};

/// True iff |pi(I)| = |I| for every interval, i.e. the map permutes each
/// level within itself.
bool is_level_preserving(const PermutationMap& map);

/// File form: {"depth": n, "map": {"<address>": "<address>", ...}} listing
/// every interval of level <= n exactly once; values must form a bijection.
/// "root" is accepted for the empty address.
PermutationMap load_permutation(const std::filesystem::path& path);
PermutationMap permutation_from_json_text(const std::string& text);
std::string permutation_to_json_text(const PermutationMap& map);
void save_permutation(const PermutationMap& map, const std::filesystem::path& path);

}  // namespace haarperm
