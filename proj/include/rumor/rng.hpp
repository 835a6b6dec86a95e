#pragma once

#include <cstdint>
#include <random>

namespace rumor {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derives a decorrelated 64-bit seed for a worker stream. Experiment cells use
// (cell, run) indices so that results are independent of scheduling order.
inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t s = master;
    splitmix64(s);
    s ^= 0x632be59bd9b4e019ULL * (a + 1);
    splitmix64(s);
    s ^= 0x9e6c63d0876a9a47ULL * (b + 1);
    return splitmix64(s);
}

// Uniform in [0,1) keyed by a directed pair, independent of draw order.
// Used by coupling harnesses that must share the same uniform across runs.
inline double keyed_uniform(std::uint64_t seed, std::uint32_t from, std::uint32_t to) {
    std::uint64_t s = seed ^ (static_cast<std::uint64_t>(from) << 32 | to);
    std::uint64_t r = splitmix64(s);
    return static_cast<double>(r >> 11) * 0x1.0p-53;
}

} // namespace rumor
