#pragma once

#include <cstdint>
#include <initializer_list>

namespace w3pl {

/// splitmix64 (Steele, Lea & Flood 2014): one 64-bit word of state, used
/// here for seed expansion and substream derivation.
struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

/// xoshiro256++ 1.0 (Blackman & Vigna), state seeded through splitmix64.
/// Chosen so reimplementations in other languages can reproduce streams
/// from the published algorithm description.
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        SplitMix64 sm{seed};
        for (auto& word : s_) word = sm.next();
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
};

/// Folds path components into a base seed via splitmix64 steps, giving each
/// (replicate, start, ...) coordinate an independent stream. Results depend
/// only on (seed, path), never on scheduling order.
inline std::uint64_t derive_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = seed;
    for (std::uint64_t component : path) {
        SplitMix64 sm{s ^ (component + 0x9e3779b97f4a7c15ULL)};
        s = sm.next();
    }
    return s;
}

}  // namespace w3pl
