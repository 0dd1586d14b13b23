#pragma once

#include <cstdint>

namespace quasr {

// Generation seed. Same seed + same parameters => bit-identical output.
struct Seed {
    std::uint64_t value = 0;
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}
}  // namespace detail

// xoshiro256** 1.0 (Blackman/Vigna), state seeded through SplitMix64.
// Substreams are derived by mixing a stream index into the root seed, which
// keeps sample streams prefix-stable: stream i never depends on how many
// other streams were drawn.
class Rng {
public:
    explicit Rng(Seed seed) : Rng(seed.value) {}
    explicit Rng(std::uint64_t seed) : root_(seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = detail::splitmix64(sm);
    }

    Rng substream(std::uint64_t index) const {
        std::uint64_t sm = root_ ^ (0x9E3779B97F4A7C15ULL * (index + 1));
        return Rng(detail::splitmix64(sm));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_double() < p; }

    // Uniform in [0, bound), unbiased by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
        std::uint64_t x;
        do { x = next_u64(); } while (x >= limit);
        return x % bound;
    }

    int below_int(int bound) { return int(below(std::uint64_t(bound))); }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t root_;
    std::uint64_t s_[4];
};

}  // namespace quasr
