#pragma once

#include <cmath>
#include <cstdint>

namespace armload {

// splitmix64; used both as a stream/seed deriver and to seed the main generator.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derive an independent sub-seed for a named stream (segmentation, split, ...)
// and element index. Every source of randomness in the pipeline flows from the
// user seed through this.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index = 0) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s = a ^ (stream * 0x9e3779b97f4a7c15ULL);
    std::uint64_t b = splitmix64(s);
    s = b ^ (index + 0x165667b19e3779f9ULL);
    return splitmix64(s);
}

// xoshiro256** with explicit uniform helpers so results do not depend on the
// standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, n). Rejection sampling keeps it unbiased.
    std::uint64_t uniform_index(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform double in [lo, hi).
    double uniform_double(double lo, double hi) { return lo + (hi - lo) * uniform_double(); }

    // Standard normal via Box-Muller (polar form avoided to keep call count fixed).
    double normal() {
        double u1 = uniform_double();
        double u2 = uniform_double();
        while (u1 <= 0.0) u1 = uniform_double();
        constexpr double kTwoPi = 6.283185307179586476925286766559;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4];
};

// Stream ids for derive_seed, kept in one place so seeds never collide.
namespace seed_stream {
inline constexpr std::uint64_t kSegmentation = 1;
inline constexpr std::uint64_t kSplit = 2;
inline constexpr std::uint64_t kCodebook = 3;
inline constexpr std::uint64_t kSvm = 4;
inline constexpr std::uint64_t kFixture = 5;
inline constexpr std::uint64_t kKmeans = 6;
}  // namespace seed_stream

}  // namespace armload
