#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace mercode {

// Deterministic RNG used everywhere randomness is needed. Wraps mt19937_64
// but does its own range reduction (rejection sampling) and its own partial
// shuffle, because std::uniform_int_distribution and std::sample are
// implementation-defined and would break byte-for-byte reproducibility
// across standard libraries.
struct Rng {
    std::mt19937_64 gen;

    explicit Rng(std::uint64_t seed) : gen(seed) {}

    std::uint64_t next() { return gen(); }

    // Uniform value in [0, n). n > 0.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return 0;
        std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n) - 1;
        std::uint64_t v;
        do {
            v = gen();
        } while (v > limit);
        return v % n;
    }

    // k distinct values sampled uniformly from [0, n), k <= n, in sampled order.
    std::vector<std::uint64_t> sample_distinct(std::uint64_t n, std::uint64_t k) {
        std::vector<std::uint64_t> idx(n);
        for (std::uint64_t i = 0; i < n; ++i) idx[i] = i;
        std::vector<std::uint64_t> out;
        out.reserve(k);
        for (std::uint64_t i = 0; i < k; ++i) {
            std::uint64_t j = i + below(n - i);
            std::swap(idx[i], idx[j]);
            out.push_back(idx[i]);
        }
        return out;
    }
};

// Mix a base seed with a stream index to get independent per-trial seeds that
// do not depend on how trials are scheduled across threads. splitmix64 step.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace mercode
