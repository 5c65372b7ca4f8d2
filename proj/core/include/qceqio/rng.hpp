#pragma once

#include <cstdint>

namespace qceqio {

// Deterministic 64-bit generator (splitmix64). A fixed seed must give identical
// streams on every platform; std::uniform_int_distribution makes no such
// guarantee across standard libraries, so sampling is done by hand here.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound > 0. Rejection sampling, no modulo bias.
    uint64_t below(uint64_t bound) {
        uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    bool coin() { return next_u64() >> 63; }

    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Stable per-stream seed derivation (seed, stream) -> child seed.
    static uint64_t derive(uint64_t seed, uint64_t stream) {
        Rng r(seed ^ (0x6a09e667f3bcc909ull + stream * 0x9e3779b97f4a7c15ull));
        r.next_u64();
        return r.next_u64();
    }

private:
    uint64_t state_;
};

}  // namespace qceqio
