#pragma once

#include <cstdint>
#include <vector>

namespace kset {

// splitmix64; fixed algorithm so sampled results are identical on every platform.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); n > 0.
    uint64_t below(uint64_t n) { return next() % n; }
};

// Sub-seed for stream 'index' of a seeded run.
inline uint64_t stream_seed(uint64_t seed, uint64_t index) {
    SplitMix64 r(seed ^ (0x632be59bd9b4e019ULL * (index + 1)));
    return r.next();
}

template <typename T>
void seeded_shuffle(std::vector<T>& v, SplitMix64& rng) {
    for (size_t i = v.size(); i > 1; --i) {
        size_t j = size_t(rng.below(i));
        std::swap(v[i - 1], v[j]);
    }
}

} // namespace kset
