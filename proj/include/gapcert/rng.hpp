#pragma once

#include "gapcert/perm.hpp"

#include <cstdint>

namespace gapcert {

/// splitmix64; used for seed derivation and as the core generator.
/// Self-contained so sampled objects are reproducible across platforms
/// and standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

class Xoshiro256ss {
public:
    explicit Xoshiro256ss(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& s : s_) s = sm.next();
    }
    std::uint64_t next() {
        auto rotl = [](std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); };
        std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }
    /// Unbiased uniform draw from {0, .., n-1} by rejection.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

private:
    std::uint64_t s_[4];
};

/// Counter-based seed derivation from a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    SplitMix64 sm(master ^ (0xa0761d6478bd642full * (index + 1)));
    return sm.next();
}

/// Seeded Fisher-Yates shuffle of the identity.
inline Perm random_permutation(int n, Xoshiro256ss& rng) {
    Perm p = perm_identity(n);
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(p[i], p[j]);
    }
    return p;
}

} // namespace gapcert
