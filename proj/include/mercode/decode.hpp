#pragma once

#include "mercode/affine_space.hpp"
#include "mercode/interpolation.hpp"

namespace mercode {

struct DecodeOptions {
    u64 seed = 0;
    double prune_constant = 4.0;   // multiplier on the trial count
    double prune_fail_prob = 1e-9; // per-decode budget for missing a candidate
};

struct DecodeTimes {
    double interpolate_ms = 0;
    double solve_ms = 0;
    double prune_ms = 0;
    double total_ms = 0;
};

// Capacity-radius parameter rule: operator order m = ceil(2/eps) and minimal
// column height (1 + 2/eps)^2. Radius approaches 1 - rate as eps shrinks, at
// the cost of taller columns and a larger candidate space.
struct CapacityChoice {
    int m;
    size_t s_min;
};
CapacityChoice choose_capacity_params(double eps);

// Subsample pruning: repeatedly sample dim+1 coordinates and keep the member
// of the space that alone matches the received columns there, if it is
// unique. Any member agreeing on at least min_agree of the n columns is
// found with probability 1 - fail_prob. Candidates are deduplicated; the
// caller applies the final agreement filter.
std::vector<Poly> prune_candidates(const CodeParams& cp, const AffineSpace& sp, const Codeword& w,
                                   size_t min_agree, u64 seed, double constant = 4.0,
                                   double fail_prob = 1e-9);

// List decoding up to the capacity radius: minimal-operator interpolation,
// divide-and-conquer equation solve, subsample pruning, agreement filter.
class CapacityDecoder {
public:
    // Throws FoldingTooSmall when the column height is below the rule for eps.
    CapacityDecoder(const CodeParams& cp, double eps);

    std::vector<Poly> decode(const Codeword& w, const DecodeOptions& opts = {},
                             DecodeTimes* times = nullptr) const;

    // agreement needed to survive the filter for an operator of the given
    // x-degree; T (s - m) strictly exceeds degree_bound + d, so a kept
    // message satisfies the exact operator equation
    i64 threshold(i64 degree_bound) const;
    int m() const { return m_; }

private:
    CodeParams cp_;
    int m_;
    CapacityInterpolator interp_;
};

// List decoding up to the Johnson radius: weighted bivariate interpolation
// with vanishing order r = ceil(1/eps), root finding, agreement filter.
class JohnsonDecoder {
public:
    JohnsonDecoder(const CodeParams& cp, double eps);

    std::vector<Poly> decode(const Codeword& w, const DecodeOptions& opts = {},
                             DecodeTimes* times = nullptr) const;

    int r() const { return r_; }
    int u() const { return u_; }

private:
    CodeParams cp_;
    int r_, u_;
    JohnsonInterpolator interp_;
};

}  // namespace mercode
