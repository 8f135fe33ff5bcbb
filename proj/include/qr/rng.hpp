#pragma once

#include <cstdint>

namespace qr {

// splitmix64. Counter-based use: seed mixed with a sample index gives an
// independent short stream per index, so parallel sampling is reproducible
// regardless of thread count or iteration order.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t s) : state(s) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1) with 53 random bits
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in [a, b)
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
};

// independent generator for sample `index` of a run seeded with `seed`
inline SplitMix64 stream_for(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mix(seed ^ (index * 0x9e3779b97f4a7c15ull + 0x632be59bd9b4e019ull));
    mix.next();
    return mix;
}

} // namespace qr
