#pragma once

#include <vector>

#include "mercode/field.hpp"

namespace mercode {

// Dense row-major matrix over the field; rows may have differing logical
// width, missing entries read as zero.
using Mat = std::vector<std::vector<u32>>;

size_t matrix_rank(Mat a, const Field& F);

struct LinSolve {
    bool consistent = false;
    bool unique = false;
    std::vector<u32> solution;  // one solution when consistent (free vars = 0)
};

// Solve a x = b for x of length ncols.
LinSolve solve_linear(Mat a, std::vector<u32> b, size_t ncols, const Field& F);

struct AffineSolve {
    bool consistent = false;
    std::vector<u32> particular;  // free variables set to zero
    Mat null_basis;               // basis of the homogeneous solution space
};

// Full solution set of a x = b: particular + span(null_basis).
AffineSolve solve_affine(Mat a, std::vector<u32> b, size_t ncols, const Field& F);

}  // namespace mercode
