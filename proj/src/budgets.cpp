#include "haarperm/budgets.hpp"

#include <cstdlib>
#include <string>

namespace haarperm {

namespace {

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    try {
        return std::stoull(raw);
    } catch (...) {
        return fallback;
    }
}

}  // namespace

Budgets Budgets::from_env() {
    Budgets b;
    b.max_subsets = env_u64("HAARPERM_MAX_SUBSETS", b.max_subsets);
    b.max_antichains = env_u64("HAARPERM_MAX_ANTICHAINS", b.max_antichains);
    b.sample_trials = env_u64("HAARPERM_SAMPLES", b.sample_trials);
    b.workers = unsigned(env_u64("HAARPERM_WORKERS", b.workers));
    if (b.workers == 0) b.workers = 1;
    return b;
}

}  // namespace haarperm
