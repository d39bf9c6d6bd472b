#include "mercode/linalg.hpp"

namespace mercode {

static u32 entry(const Mat& a, size_t i, size_t j) {
    return j < a[i].size() ? a[i][j] : 0;
}

// forward elimination into row echelon form; returns pivot columns
static std::vector<size_t> echelon(Mat& a, std::vector<u32>* b, size_t ncols, const Field& F) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < a.size(); ++col) {
        size_t sel = row;
        while (sel < a.size() && entry(a, sel, col) == 0) ++sel;
        if (sel == a.size()) continue;
        std::swap(a[row], a[sel]);
        if (b) std::swap((*b)[row], (*b)[sel]);
        const u32 inv = F.inv(entry(a, row, col));
        if (a[row].size() < ncols) a[row].resize(ncols, 0);
        for (size_t j = col; j < ncols; ++j) a[row][j] = F.mul(a[row][j], inv);
        if (b) (*b)[row] = F.mul((*b)[row], inv);
        for (size_t i = 0; i < a.size(); ++i) {
            if (i == row) continue;
            const u32 c = entry(a, i, col);
            if (c == 0) continue;
            if (a[i].size() < ncols) a[i].resize(ncols, 0);
            for (size_t j = col; j < ncols; ++j) a[i][j] = F.sub(a[i][j], F.mul(c, a[row][j]));
            if (b) (*b)[i] = F.sub((*b)[i], F.mul(c, (*b)[row]));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t matrix_rank(Mat a, const Field& F) {
    size_t ncols = 0;
    for (const auto& r : a) ncols = std::max(ncols, r.size());
    return echelon(a, nullptr, ncols, F).size();
}

LinSolve solve_linear(Mat a, std::vector<u32> b, size_t ncols, const Field& F) {
    LinSolve out;
    if (a.size() != b.size()) return out;
    const std::vector<size_t> pivots = echelon(a, &b, ncols, F);
    for (size_t i = pivots.size(); i < a.size(); ++i)
        if (b[i] != 0) return out;  // 0 = nonzero row
    out.consistent = true;
    out.unique = pivots.size() == ncols;
    out.solution.assign(ncols, 0);
    for (size_t i = 0; i < pivots.size(); ++i) out.solution[pivots[i]] = b[i];
    return out;
}

AffineSolve solve_affine(Mat a, std::vector<u32> b, size_t ncols, const Field& F) {
    AffineSolve out;
    if (a.size() != b.size()) return out;
    const std::vector<size_t> pivots = echelon(a, &b, ncols, F);
    for (size_t i = pivots.size(); i < a.size(); ++i)
        if (b[i] != 0) return out;
    out.consistent = true;
    out.particular.assign(ncols, 0);
    for (size_t i = 0; i < pivots.size(); ++i) out.particular[pivots[i]] = b[i];
    std::vector<bool> is_pivot(ncols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    for (size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<u32> v(ncols, 0);
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(entry(a, i, free));
        out.null_basis.push_back(std::move(v));
    }
    return out;
}

}  // namespace mercode
