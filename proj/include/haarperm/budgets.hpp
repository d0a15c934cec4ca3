#pragma once

#include <cstdint>

namespace haarperm {

/// Enumeration and sampling caps. Exhaustive searches refuse to start when
/// the search space exceeds the cap, so runtimes stay predictable. Values
/// can be overridden through the environment:
///   HAARPERM_MAX_SUBSETS, HAARPERM_MAX_ANTICHAINS, HAARPERM_SAMPLES,
///   HAARPERM_WORKERS
struct Budgets {
    std::uint64_t max_subsets = std::uint64_t(1) << 15;
    std::uint64_t max_antichains = 1'000'000;
    std::uint64_t sample_trials = 10'000;
    unsigned workers = 1;

    static Budgets from_env();
};

}  // namespace haarperm
