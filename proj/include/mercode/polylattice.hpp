#pragma once

#include <vector>

#include "mercode/poly.hpp"

namespace mercode {

// Row vector of polynomials. The norm of a vector is its degree: the maximum
// entry degree (kZeroPolyDeg for the zero vector).
using PolyVec = std::vector<Poly>;
// Row-major full-rank basis of a polynomial lattice.
using LatticeBasis = std::vector<PolyVec>;

i64 vec_degree(const PolyVec& v);

// Greatest index attaining the maximum entry degree. Throws ZeroVector.
size_t leading_coordinate(const PolyVec& v);

bool is_reduced(const LatticeBasis& b);

// Weak-Popov reduction by simple transformations: while two rows share a
// leading coordinate, subtract a monomial multiple of one from the other.
// When their degrees differ the higher-degree row is reduced; on ties the
// lower-index row is reduced. The result spans the same lattice and has
// pairwise distinct leading coordinates. Throws DegenerateBasis if a row
// becomes zero (linearly dependent input).
LatticeBasis reduce_basis(LatticeBasis b, const Field& F);

// A nonzero lattice vector of minimal degree: reduce, then take the smallest
// degree (ties broken by smallest leading coordinate).
PolyVec shortest_vector(const LatticeBasis& b, const Field& F);

// Degree of det(b) for a square basis. Triangular bases read the diagonal;
// otherwise evaluation-interpolation (requires enough field points: throws
// ValidationError when the degree bound reaches p). Returns kZeroPolyDeg for
// a singular matrix.
i64 det_degree(const LatticeBasis& b, const Field& F);

}  // namespace mercode
