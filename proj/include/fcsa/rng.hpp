#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace fcsa {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace detail

/// xoshiro256** seeded through SplitMix64. All derived quantities are
/// bit-reproducible across platforms; std:: distributions are avoided on
/// purpose since the standard leaves their output unspecified.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = detail::splitmix64(sm);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = detail::rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = detail::rotl(state_[3], 45);
        return result;
    }

    /// Uniform integer in [0, bound) by masked rejection (unbiased).
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t mask = ~0ULL;
        const int zeros = __builtin_clzll(bound - 1);
        mask >>= zeros;
        for (;;) {
            const std::uint64_t candidate = next_u64() & mask;
            if (candidate < bound) return candidate;
        }
    }

    /// Uniform in [0,1) with 53 bits of precision.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            std::swap(values[i - 1], values[below(i)]);
        }
    }

    /// k distinct values from [0, n), ascending.
    std::vector<int> sample_distinct(int k, int n) {
        std::vector<int> pool(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
        for (int i = 0; i < k; ++i) {
            const auto j = i + static_cast<int>(below(static_cast<std::uint64_t>(n - i)));
            std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
        }
        pool.resize(static_cast<std::size_t>(k));
        std::sort(pool.begin(), pool.end());
        return pool;
    }

private:
    std::uint64_t state_[4];
};

/// Derives an independent stream seed from (seed, index); used for
/// per-trial streams so parallel sweeps stay reproducible.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t sm = seed;
    const std::uint64_t a = detail::splitmix64(sm);
    sm = index ^ 0x6a09e667f3bcc908ULL;
    const std::uint64_t b = detail::splitmix64(sm);
    sm = a ^ detail::rotl(b, 32);
    return detail::splitmix64(sm);
}

} // namespace fcsa
