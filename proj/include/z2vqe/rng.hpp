#pragma once

#include <cstdint>

namespace z2vqe {

// SplitMix64 mix step; used to derive independent sub-seeds from a master
// seed so that parallel runs and repeated evaluations stay reproducible.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(master ^ splitmix64(stream));
}

}  // namespace z2vqe
