/**
 * Portable, reproducible randomness helpers.  std::mt19937_64 output is
 * fully specified by the standard; the distributions here avoid
 * std::uniform_int_distribution, whose mapping is implementation-defined.
 */

#ifndef SPECGEO_RNG_HPP
#define SPECGEO_RNG_HPP

#include <cstdint>
#include <random>

namespace specgeo {

/** SplitMix64 step; used to derive independent substream seeds. */
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/** Seed for substream `index` of a master seed (parallel sampling). */
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master + 0x9e3779b97f4a7c15ull * (index + 1));
}

/** Unbiased uniform draw from {0, ..., bound-1} via rejection sampling. */
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % bound;
}

}  // namespace specgeo

#endif
