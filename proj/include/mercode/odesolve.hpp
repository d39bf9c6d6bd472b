#pragma once

#include "mercode/affine_space.hpp"
#include "mercode/operators.hpp"

namespace mercode {

// Unique f of degree < k with
//   b + conjugate(q, n)(x, f, f', .., f^(m)) == 0 mod x^k.
// Requires q normalized (top part with nonzero constant term, throws
// NotNormalized otherwise); throws CharacteristicTooSmall when a falling
// factorial on the diagonal vanishes mod p. Halving recursion: the low half
// of f is solved at precision k/2, its residual is divided by x^(k/2) and the
// high half is solved against the conjugate shifted by k/2.
Poly solve_forced(const AffineOperator& q, const Poly& b, u64 n, size_t k, const Field& F);

// All f with deg f <= d solving qfree + sum_i q[i] f^(i) = 0, as an affine
// space of dimension at most the y-order. Normalizes internally, so the only
// requirements are some nonzero q[i] (NoYSupport) and d at least the
// effective order (DegreeTooSmall).
AffineSpace solve_derivative_equation(const AffineOperator& op, i64 d, const Field& F);

// Reference solver: coefficient-by-coefficient forward substitution, one row
// per output coefficient. Quadratic, for cross-checking.
AffineSpace triangular_derivative_solve(const AffineOperator& op, i64 d, const Field& F);

}  // namespace mercode
