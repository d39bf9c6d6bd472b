#pragma once

#include <vector>

#include "mercode/field.hpp"

namespace mercode {

// Power-of-two number-theoretic transforms over F_p. Requires
// F.two_adicity >= log2(a.size()). Twiddle tables are cached per modulus and
// use Shoup precomputation (64-bit magic per root) so a butterfly costs one
// high-mul, one low-mul and two conditional subtractions.
//
// ntt_serial is the reference implementation; ntt_omp is the OpenMP kernel
// (identical output, tested against the reference); ntt dispatches on size
// and thread cap.
void ntt_serial(std::vector<u32>& a, bool inverse, const Field& F);
void ntt_omp(std::vector<u32>& a, bool inverse, const Field& F);
void ntt(std::vector<u32>& a, bool inverse, const Field& F);

// Convolution (polynomial product, no truncation) of a and b mod F.p.
// Dispatches: schoolbook below a cutoff; single-prime NTT when F has enough
// two-adic headroom; otherwise a multi-prime NTT + CRT reconstruction
// (exact because the chosen prime product exceeds the coefficient bound).
// Empty input => empty output.
std::vector<u32> convolve(const std::vector<u32>& a, const std::vector<u32>& b, const Field& F);

std::vector<u32> convolve_school(const std::vector<u32>& a, const std::vector<u32>& b,
                                 const Field& F);

// --- building blocks shared with the matrix-product code ---

// The fixed NTT prime list used for CRT convolutions: (p, two_adicity).
// Products of prefixes of this list bound the reachable coefficient sizes.
struct CrtPrime {
    u32 p;
    int two_adicity;
};
extern const CrtPrime kCrtPrimes[3];

// Fields for the CRT primes (constructed once).
const Field& crt_field(int i);

// Number of CRT primes needed for an exact convolution of the given shapes,
// or 0 if the target field itself supports a direct transform of size
// `transform_size`. Throws ValidationError when no plan fits.
struct ConvPlan {
    bool direct;       // single transform over the target field
    int num_primes;    // when !direct: how many kCrtPrimes to use
    size_t transform_size;
};
ConvPlan plan_convolution(size_t len_a, size_t len_b, const Field& F);

// Garner reconstruction of a value from residues r[0..np) mod the first np
// CRT primes, reduced mod F.p. Exact when the true value < product of primes.
u32 crt_reconstruct(const u32* r, int np, const Field& F);

}  // namespace mercode
