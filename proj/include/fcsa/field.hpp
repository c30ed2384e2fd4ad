#pragma once

#include <cstdint>

#include "fcsa/errors.hpp"

namespace fcsa {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline constexpr u64 kDefaultModulus = 2147483647ULL; // 2^31 - 1

namespace detail {

inline u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 powmod_u64(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1ULL) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1ULL;
    }
    return result;
}

// Deterministic Miller-Rabin, valid for all 64-bit integers with this base set.
inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1ULL) == 0) {
        d >>= 1ULL;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

} // namespace detail

/// Arithmetic context for the prime field Z_p. Elements are canonical
/// u64 values in [0, p); every operation returns a canonical value.
/// Moduli up to 2^63 are supported (products reduced through 128 bits).
class PrimeField {
public:
    explicit PrimeField(u64 modulus = kDefaultModulus) : p_(modulus) {
        if (!detail::is_prime_u64(modulus)) {
            throw InvalidParams("field modulus must be prime, got " + std::to_string(modulus));
        }
        if (modulus >= (1ULL << 63)) {
            throw InvalidParams("field modulus must be below 2^63");
        }
    }

    u64 modulus() const { return p_; }

    u64 reduce(u64 x) const { return x % p_; }

    /// Maps a signed integer to its canonical residue.
    u64 from_int(long long x) const {
        long long r = x % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<u64>(r);
    }

    u64 add(u64 a, u64 b) const {
        const u64 s = a + b; // < 2^64 since both < 2^63
        return s >= p_ ? s - p_ : s;
    }

    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + (p_ - b); }

    u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }

    u64 mul(u64 a, u64 b) const { return detail::mulmod_u64(a, b, p_); }

    u64 pow(u64 base, u64 exp) const { return detail::powmod_u64(base, exp, p_); }

    // Fermat inverse; p is prime by construction.
    u64 inv(u64 a) const {
        if (a == 0) throw ZeroInverse();
        return pow(a, p_ - 2);
    }

    u64 div(u64 a, u64 b) const { return mul(a, inv(b)); }

    bool operator==(const PrimeField& other) const { return p_ == other.p_; }

private:
    u64 p_;
};

} // namespace fcsa
