#pragma once

#include <cstdint>
#include <random>

namespace kord {

// Uniform integer in [0, bound) by rejection on a 64-bit engine. Unlike
// std::uniform_int_distribution the sequence is identical across standard libraries.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

// Bernoulli(num/den) from the same engine.
inline bool coin(std::mt19937_64& rng, std::uint64_t num, std::uint64_t den) { return uniform_below(rng, den) < num; }

// Independent per-instance seed: splitmix64 of (seed, index).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

template <class Container>
void shuffle_in_place(Container& c, std::mt19937_64& rng) {
    for (std::size_t i = c.size(); i > 1; --i) {
        std::swap(c[i - 1], c[uniform_below(rng, i)]);
    }
}

} // namespace kord
