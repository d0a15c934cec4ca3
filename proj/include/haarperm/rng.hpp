#pragma once

#include <cstdint>

namespace haarperm {

/// Deterministic 64-bit generator (splitmix64). Reports must be
/// byte-identical across platforms, so no <random> distributions are used
/// anywhere; everything derives from this stream.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n), n >= 1, by rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
        for (;;) {
            const std::uint64_t v = next();
            if (v < limit) return v % n;
        }
    }

    bool coin() { return (next() & 1u) != 0; }

  private:
    std::uint64_t state_;
};

/// Stable seed derivation, so trial k of stream s under master seed m is the
/// same regardless of scheduling or worker count.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                 std::uint64_t counter = 0) {
    Rng mix(master ^ (stream * 0xD1B54A32D192ED03ull) ^
            (counter * 0x8CB92BA72F3D8DD7ull));
    mix.next();
    return mix.next();
}

}  // namespace haarperm
