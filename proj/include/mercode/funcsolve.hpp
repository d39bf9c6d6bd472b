#pragma once

#include "mercode/affine_space.hpp"
#include "mercode/operators.hpp"

namespace mercode {

// Triangular solve of  b + sum_i q[i](x) f(gamma^i x) == 0  mod x^k  for f of
// degree < k. Coefficient j of f sits on the diagonal P(gamma^j) where P is
// the characteristic polynomial of the constant terms; rows with a vanishing
// diagonal do not determine their coefficient, which is instead set to 1 at
// index `pin` and to 0 elsewhere (pin = -1 pins nothing). Inconsistent rows
// are ignored here and surface in the caller's exact verification. Requires
// some q[i] with nonzero constant term (NotNormalized).
Poly solve_pinned(const AffineOperator& q, const Poly& b, u32 gamma, size_t k, int pin,
                  const Field& F);

// All f with deg f <= d solving qfree + sum_i q[i] f(gamma^i x) = 0, as an
// affine space of dimension at most the y-order. Requires the order of gamma
// to exceed d (OrderTooSmall) so the diagonal values cover distinct powers;
// throws NoYSupport when every q[i] is zero. An unsatisfiable equation
// returns the empty space.
AffineSpace solve_folded_equation(const AffineOperator& op, u32 gamma, i64 d, const Field& F);

// Reference solver: forward substitution row by row. Quadratic.
AffineSpace triangular_folded_solve(const AffineOperator& op, u32 gamma, i64 d, const Field& F);

}  // namespace mercode
