#pragma once

#include <cstdint>

namespace sftirr {

// SplitMix64 with the standard constants. This is the project-wide PRNG
// contract: every sampled symbol consumes exactly one 64-bit output,
// mapped to [0,1) by dividing by 2^64.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // In [0,1]; the right endpoint is reachable only through rounding of
    // values within 2^-54 of 1, callers must tolerate u == 1.
    double next_unit() { return static_cast<double>(next()) * 0x1.0p-64; }

private:
    std::uint64_t state_;
};

// Sub-seed k of a master seed: output #k of the SplitMix64 stream seeded
// with the master. Used to shard multi-seed experiments reproducibly.
inline std::uint64_t sub_seed(std::uint64_t master, std::uint64_t k) {
    SplitMix64 rng(master);
    std::uint64_t z = rng.next();
    for (std::uint64_t i = 0; i < k; ++i) z = rng.next();
    return z;
}

}  // namespace sftirr
