#pragma once

#include <functional>

#include "mercode/poly.hpp"

namespace mercode {

// Affine set of polynomials offset + span(directions); `none` marks the empty
// set (offset and directions are then meaningless). Directions need not be
// linearly independent.
struct AffineSpace {
    Poly offset;
    std::vector<Poly> directions;
    bool none = false;

    static AffineSpace empty() {
        AffineSpace s;
        s.none = true;
        return s;
    }
    static AffineSpace point(Poly f) {
        AffineSpace s;
        s.offset = std::move(f);
        return s;
    }
};

// Dimension of the span; -1 for the empty set.
int affine_dim(const AffineSpace& s, const Field& F);

bool affine_member(const AffineSpace& s, const Poly& f, const Field& F);

bool affine_equal(const AffineSpace& a, const AffineSpace& b, const Field& F);

// offset + independent subset of directions (same set, minimal description)
AffineSpace affine_reduce(const AffineSpace& s, const Field& F);

// All members; guarded against blowup, p^dim must stay small.
std::vector<Poly> affine_enumerate(const AffineSpace& s, const Field& F);

// Exact solutions within a candidate family offset + span(cands[i] - offset):
// residual must be affine in its argument, and the returned space holds
// exactly the members with residual zero (possibly empty).
AffineSpace exact_affine_solutions(const Poly& offset, const std::vector<Poly>& cands,
                                   const std::function<Poly(const Poly&)>& residual,
                                   const Field& F);

}  // namespace mercode
