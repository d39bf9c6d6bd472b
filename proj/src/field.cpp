#include "mercode/field.hpp"

namespace mercode {

bool is_prime_u32(u32 n) {
    if (n < 2) return false;
    for (u32 q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % q == 0) return n == q;
    }
    // Deterministic Miller-Rabin; these bases cover all n < 3.2e18.
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    auto mulmod = [n](u64 a, u64 b) { return u64(u128(a) * b % n); };
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = 1, base = a % n, e = d;
        while (e) {
            if (e & 1) x = mulmod(x, base);
            base = mulmod(base, base);
            e >>= 1;
        }
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i + 1 < r; ++i) {
            x = mulmod(x, x);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> fs;
    for (u64 q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
        if (n % q == 0) {
            fs.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

Field::Field(u32 p_) : p(p_) {
    if (p < 3 || p >= (1u << 31) || !is_prime_u32(p))
        throw ValidationError("field modulus must be an odd prime below 2^31");
    barrett = u64((u128(1) << 64) / p);  // 2^64 / p truncated; p < 2^31 keeps quotient exact enough

    u64 phi = p - 1;
    auto fs = prime_factors(phi);
    generator = 0;
    for (u32 g = 2; g < p; ++g) {
        bool ok = true;
        for (u64 q : fs) {
            if (pow(g, phi / q) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            generator = g;
            break;
        }
    }

    two_adicity = 0;
    u64 t = phi;
    while ((t & 1) == 0) {
        t >>= 1;
        ++two_adicity;
    }
    two_adic_root = pow(generator, t);
}

u64 Field::order(u32 a) const {
    if (a == 0) throw NotInvertible("order of zero");
    u64 ord = p - 1;
    for (u64 q : prime_factors(p - 1)) {
        while (ord % q == 0 && pow(a, ord / q) == 1) ord /= q;
    }
    return ord;
}

u32 Field::root_of_unity(u64 n) const {
    if (n == 0 || (u64(p) - 1) % n != 0)
        throw OrderTooSmall("no element of the requested multiplicative order");
    u32 w = pow(generator, (u64(p) - 1) / n);
    return w;
}

}  // namespace mercode
