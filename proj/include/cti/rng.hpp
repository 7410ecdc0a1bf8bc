#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace cti {

// FNV-1a, used to derive stage/cell seeds from the master seed so results do
// not depend on execution order.
inline std::uint64_t hash_combine(std::uint64_t seed, std::string_view tag) {
    std::uint64_t h = 14695981039346656037ull;
    for (int i = 0; i < 8; ++i) {
        h ^= (seed >> (8 * i)) & 0xffu;
        h *= 1099511628211ull;
    }
    for (unsigned char c : tag) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t derive_seed(std::uint64_t master, std::string_view stage) {
    return hash_combine(master, stage);
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

// Uniform in [0,1).
inline double uniform01(Rng& rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

}  // namespace cti
