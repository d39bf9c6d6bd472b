#pragma once

#include "mercode/poly.hpp"

namespace mercode {

// Affine operator Q(x, y_0..y_m) = qfree(x) + sum_i q[i](x) * y_i. The two
// decoding pipelines instantiate y_i with derivatives f^(i) or with dilations
// f(gamma^i x); everything here is agnostic until an apply_* call.
struct AffineOperator {
    std::vector<Poly> q;  // y_0..y_m coefficients; arity m+1
    Poly qfree;
    i64 x_degree_bound = 0;  // bound on deg of every part, tracked not trusted

    int y_order() const { return int(q.size()) - 1; }
    bool all_y_zero() const {
        for (const Poly& f : q)
            if (!poly_is_zero(f)) return false;
        return true;
    }
};

// Q(x, f, f', ..., f^(m))
Poly apply_derivative(const AffineOperator& op, const Poly& f, const Field& F);
// Q(x, f(x), f(gamma x), ..., f(gamma^m x))
Poly apply_folded(const AffineOperator& op, const Poly& f, u32 gamma, const Field& F);

// f(gamma^power * x)
Poly dilate_poly(const Poly& f, u32 gamma, u64 power, const Field& F);

// Derivative of the composition: the returned operator D (arity m+2)
// satisfies D(x, f, .., f^(m+1)) = d/dx [ Q(x, f, .., f^(m)) ] for every f.
AffineOperator differentiate_operator(const AffineOperator& op, const Field& F);

// Folded shift: the returned operator S (arity m+2) satisfies
// S(x, f(x), f(gamma x), .., f(gamma^{m+1} x)) = Q(gamma x, f(gamma x), ..,
// f(gamma^{m+1} x)) for every f.
AffineOperator dilate_operator(const AffineOperator& op, u32 gamma, const Field& F);

// Conjugate operator for the shifted divide-and-conquer solve: has no y-free
// part, parts x^i * sum_{j>=i} ff(n, j-i) C(j,i) x^{m-j} q_j(x), and satisfies
//   conjugate(Q,n)(x, g, .., g^(m)) = x^(m-n) * sum_j q_j(x) (x^n g)^(j)
// as polynomials whenever n >= m or g makes the right side polynomial.
AffineOperator conjugate_operator(const AffineOperator& op, u64 n, const Field& F);

// Constant-term data of a folded operator: support B = { i : q_i(0) != 0 }
// and the characteristic polynomial P(z) = sum_{i in B} q_i(0) z^i.
struct FoldedSpectrum {
    std::vector<int> support;
    Poly char_poly;
};
FoldedSpectrum folded_spectrum(const AffineOperator& op, const Field& F);

// Z = { 0 <= i < k : P(gamma^i) = 0 }, the candidate pinning indices.
std::vector<int> folded_zero_set(const AffineOperator& op, u32 gamma, size_t k, const Field& F);

// Normalization for the derivative solver: drop zero top parts (m_eff), find
// the smallest beta with q_{m_eff}(beta) != 0 and shift x -> x + beta so the
// top part has a nonzero constant term. Solutions of the shifted equation map
// back through taylor_shift(., -beta). Throws NoYSupport if every q_i = 0.
struct NormalizedDerivative {
    AffineOperator op;
    int m_eff;
    u32 beta;
};
NormalizedDerivative normalize_derivative(const AffineOperator& op, const Field& F);

// Normalization for the folded solver: drop zero top parts, then peel the
// largest common power of x. Throws NoYSupport if every q_i = 0; throws
// NoSolution when after peeling only the y-free part has a nonzero constant
// term (the equation forces qfree(0) = 0, a contradiction).
struct NormalizedFolded {
    AffineOperator op;
    int m_eff;
    size_t x_valuation;
};
NormalizedFolded normalize_folded(const AffineOperator& op, const Field& F);

}  // namespace mercode
