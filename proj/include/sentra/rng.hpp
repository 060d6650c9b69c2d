#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

namespace sentra {

// Portable seeded generator: mt19937_64 raw draws are pinned by the standard,
// and the distributions below are written out explicitly so streams are
// bit-identical across platforms (std::*_distribution is not portable).
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }

    // uniform in [0, 1)
    double uniform01() { return double(gen_() >> 11) * 0x1.0p-53; }

    // uniform in [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // uniform over {0, 1, ..., n-1}, n >= 1; rejection-free modulo bias is
    // negligible for the small n used here but we reject anyway
    int uniform_int(int n) {
        const uint64_t bound = uint64_t(n);
        const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t x = gen_();
        while (x >= limit) x = gen_();
        return int(x % bound);
    }

    // standard normal via Box-Muller (no cached spare; two draws per call)
    double normal() {
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

private:
    std::mt19937_64 gen_;
};

// splitmix64 — used to derive independent sub-seeds from one master seed.
inline uint64_t split_seed(uint64_t seed, uint64_t stream) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline uint64_t fnv1a_hash(const std::string& s) {
    uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace sentra
