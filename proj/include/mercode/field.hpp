#pragma once

#include <cstdint>
#include <vector>

#include "mercode/errors.hpp"

namespace mercode {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i64 = std::int64_t;

// Prime field F_p for an odd prime p < 2^31. Elements are canonical residues
// in [0, p). Multiplication uses a Barrett reduction with a 64-bit magic
// constant; all operations are branch-light and safe for the full range.
class Field {
public:
    explicit Field(u32 p);

    u32 p;
    // floor(2^64 / p), used by mul().
    u64 barrett;
    // A primitive root of F_p^* (generator of the full multiplicative group).
    u32 generator;
    // Largest k with 2^k | p-1, and an element of order exactly 2^k.
    int two_adicity;
    u32 two_adic_root;

    u32 add(u32 a, u32 b) const {
        u32 s = a + b;
        return s >= p ? s - p : s;
    }
    u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + p - b; }
    u32 neg(u32 a) const { return a == 0 ? 0 : p - a; }

    u32 mul(u32 a, u32 b) const {
        u64 z = u64(a) * b;
        u64 q = u64((u128(z) * barrett) >> 64);
        u64 r = z - q * p;
        if (r >= p) r -= p;
        return u32(r);
    }

    // Reduce an arbitrary 64-bit value mod p.
    u32 reduce(u64 z) const {
        u64 q = u64((u128(z) * barrett) >> 64);
        u64 r = z - q * p;
        while (r >= p) r -= p;
        return u32(r);
    }

    u32 pow(u32 a, u64 e) const {
        u32 r = 1;
        u32 b = a;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

    // Throws NotInvertible on 0.
    u32 inv(u32 a) const {
        if (a == 0) throw NotInvertible("inverse of zero");
        return pow(a, u64(p) - 2);
    }

    // Multiplicative order of a (a != 0). Factors p-1 once per call.
    u64 order(u32 a) const;

    // Element of multiplicative order exactly n; throws OrderTooSmall if n
    // does not divide p-1.
    u32 root_of_unity(u64 n) const;

    bool operator==(const Field& o) const { return p == o.p; }
};

// Deterministic primality check for 32-bit numbers.
bool is_prime_u32(u32 n);

// Distinct prime factors of n.
std::vector<u64> prime_factors(u64 n);

}  // namespace mercode
