#pragma once

#include <vector>

#include "mercode/polylattice.hpp"

namespace mercode {

// C = A * B for row-major polynomial matrices, A: ra x m, B: m x cb.
// Entries are transformed once per NTT prime and combined pointwise, so the
// cost is (ra*m + m*cb + ra*cb) transforms instead of ra*cb*m convolutions.
std::vector<Poly> polymat_mul(const std::vector<Poly>& A, size_t ra, size_t m,
                              const std::vector<Poly>& B, size_t cb, const Field& F);

struct MinimalBasis {
    // k x k row-major basis matrix: row i spans basis vector i.
    std::vector<Poly> rows;
    size_t k = 0;
    // Shifted row degrees under the shift passed to solve().
    std::vector<i64> sdeg;

    const Poly& at(size_t i, size_t j) const { return rows[i * k + j]; }
};

// Divide-and-conquer solver for shifted minimal bases of congruence modules
//
//   M = { v in F[x]^k : for every column t, sum_i v[i]*f_t[i] ≡ 0
//                       mod prod_j (x - points[j])^{mult_t[j]} }.
//
// The point-dependent structures (per-column modulus trees and Newton
// inverses) are built once at construction and shared by every solve() call,
// so decoding many received words against the same code costs one tree setup.
//
// The recursion halves the point range, solves the left half, multiplies the
// reduced residual by the left basis, solves the right half under the updated
// shift, and composes. A leaf (single point) runs the iterative elimination:
// conditions are processed by ascending derivative order, each picks the
// pivot row of minimal shifted degree breaking ties to the lowest index,
// eliminates the other rows and multiplies the pivot row by (x - point).
class CongruenceEngine {
public:
    // mults[t][j] = multiplicity of points[j] in column t's modulus (0 ok).
    // max_input_deg: bound on the degree of solve() inputs, used to size the
    // root Newton inverse (pass 0 to skip that precomputation).
    CongruenceEngine(size_t k, std::vector<u32> points, std::vector<std::vector<int>> mults,
                     const Field& F, i64 max_input_deg = 0);

    // fcols[t][i] = entry i of column t. shift.size() == k.
    MinimalBasis solve(const std::vector<std::vector<Poly>>& fcols,
                       const std::vector<i64>& shift) const;

    size_t dim() const { return k_; }
    size_t num_columns() const { return mults_.size(); }
    // Total number of conditions (the determinant degree of the module).
    i64 sigma() const { return sigma_; }

private:
    struct Node {
        Poly modulus;   // per-column modulus on this point range
        Poly inv;       // inverse of rev(modulus), padded to its precision
    };

    size_t k_;
    std::vector<u32> pts_;
    std::vector<std::vector<int>> mults_;
    const Field& F_;
    i64 sigma_;
    size_t num_levels_;
    // trees_[t][level][idx]: column t's modulus on the point range
    // [idx*2^level, (idx+1)*2^level) intersected with the point set.
    std::vector<std::vector<std::vector<Node>>> trees_;
    // range_sigma_[level][idx]: total conditions on that point range
    std::vector<std::vector<i64>> range_sigma_;

    i64 range_total(size_t level, size_t idx) const;
    Poly reduce_mod(size_t col, size_t level, size_t idx, const Poly& f) const;
    void solve_rec(size_t level, size_t idx, std::vector<std::vector<Poly>>& fcols,
                   std::vector<i64>& sdeg, std::vector<Poly>& basis_out) const;
    void leaf(size_t point_idx, std::vector<std::vector<Poly>>& fcols, std::vector<i64>& sdeg,
              std::vector<Poly>& basis_out) const;
};

}  // namespace mercode
