#pragma once

#include "mercode/poly.hpp"

namespace mercode {

// Q(x, y) = sum_t cy[t](x) * y^t
struct BivariatePoly {
    std::vector<Poly> cy;

    int y_degree() const {
        for (size_t t = cy.size(); t-- > 0;)
            if (!poly_is_zero(cy[t])) return int(t);
        return -1;
    }
    bool zero() const { return y_degree() < 0; }
};

// Q(x, f(x))
Poly bivariate_eval(const BivariatePoly& q, const Poly& f, const Field& F);

// All distinct roots of a nonzero polynomial, ascending. Exhaustive scan for
// small fields, gcd with x^p - x plus randomized splitting otherwise; the
// seed only steers the splitting so results stay deterministic.
std::vector<u32> univariate_roots(const Poly& f, const Field& F, u64 seed = 0);

// All f with deg f <= dmax and Q(x, f(x)) = 0 for nonzero Q. Shift-and-divide
// recursion on the coefficients of f; every returned root is verified by an
// exact plug-in, so the list is complete and has no false positives.
std::vector<Poly> bivariate_roots(const BivariatePoly& q, i64 dmax, const Field& F, u64 seed = 0);

}  // namespace mercode
