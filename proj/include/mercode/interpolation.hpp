#pragma once

#include <memory>

#include "mercode/codes.hpp"
#include "mercode/minbasis.hpp"
#include "mercode/operators.hpp"
#include "mercode/rootfind.hpp"

namespace mercode {

// Capacity-radius interpolation. Finds a minimal-degree affine operator that
// annihilates the received-word interpolant modulo the per-column agreement
// moduli. Any message agreeing with enough columns then satisfies the exact
// equation Q(x, f, f', .., f^(m)) = 0 (derivative columns) respectively
// Q(x, f(x), f(gx), .., f(g^m x)) = 0 (folded columns).
//
// Point-dependent precomputation (interpolation trees, congruence modulus
// trees, Newton inverses) happens once at construction; run() per word.
class CapacityInterpolator {
public:
    CapacityInterpolator(const CodeParams& cp, int m);

    struct Result {
        AffineOperator op;  // x_degree_bound = achieved minimal row degree
        Poly a;             // interpolant of the full received word
    };
    Result run(const Codeword& w) const;

    // Number of columns of w whose whole jet matches f. One remainder push
    // down the construction-time tree, much cheaper than re-encoding f.
    size_t agreement(const Poly& f, const Codeword& w) const;

    int m() const { return m_; }
    // total condition count; the minimal degree is at most sigma/(m+2)
    i64 sigma() const { return engine_->sigma(); }

private:
    CodeParams cp_;
    int m_;
    std::unique_ptr<HermiteSystem> full_;
    std::unique_ptr<CongruenceEngine> engine_;
};

// Johnson-radius interpolation: weighted-minimal bivariate Q(x, y) with
// y-degree <= u vanishing with multiplicity r at every received column jet.
// A message agreeing with a columns has Q(x, f) divisible by a polynomial of
// degree a*s*r, so a*s*r > weighted_degree forces Q(x, f) = 0.
class JohnsonInterpolator {
public:
    JohnsonInterpolator(const CodeParams& cp, int r, int u);

    struct Result {
        BivariatePoly q;
        Poly a;
        i64 weighted_degree;  // max_t  deg q_t + t*d  achieved
    };
    Result run(const Codeword& w) const;

    size_t agreement(const Poly& f, const Codeword& w) const;

    int r() const { return r_; }
    int u() const { return u_; }
    i64 sigma() const { return engine_->sigma(); }

private:
    CodeParams cp_;
    int r_, u_;
    std::unique_ptr<HermiteSystem> full_;
    Poly m0_;      // modulus of the multiplicity-r column (the largest one)
    Poly m0_inv_;  // Newton inverse of its reversal, for power reductions
    std::unique_ptr<CongruenceEngine> engine_;
};

}  // namespace mercode
