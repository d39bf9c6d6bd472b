#include "mercode/affine_space.hpp"

#include "mercode/errors.hpp"
#include "mercode/linalg.hpp"

namespace mercode {

static Mat direction_rows(const AffineSpace& s) {
    Mat rows;
    rows.reserve(s.directions.size());
    for (const Poly& d : s.directions) rows.push_back(d);
    return rows;
}

int affine_dim(const AffineSpace& s, const Field& F) {
    if (s.none) return -1;
    return int(matrix_rank(direction_rows(s), F));
}

bool affine_member(const AffineSpace& s, const Poly& f, const Field& F) {
    if (s.none) return false;
    Mat rows = direction_rows(s);
    const size_t base = matrix_rank(rows, F);
    rows.push_back(poly_sub(f, s.offset, F));
    return matrix_rank(std::move(rows), F) == base;
}

bool affine_equal(const AffineSpace& a, const AffineSpace& b, const Field& F) {
    if (a.none || b.none) return a.none == b.none;
    Mat ra = direction_rows(a);
    Mat rb = direction_rows(b);
    const size_t da = matrix_rank(ra, F);
    if (da != matrix_rank(rb, F)) return false;
    Mat joint = ra;
    joint.insert(joint.end(), rb.begin(), rb.end());
    if (matrix_rank(std::move(joint), F) != da) return false;
    return affine_member(a, b.offset, F);
}

AffineSpace affine_reduce(const AffineSpace& s, const Field& F) {
    if (s.none) return s;
    AffineSpace out;
    out.offset = s.offset;
    Mat kept;
    for (const Poly& d : s.directions) {
        if (poly_is_zero(d)) continue;
        Mat trial = kept;
        trial.push_back(d);
        if (matrix_rank(trial, F) > kept.size()) {
            kept.push_back(d);
            out.directions.push_back(d);
        }
    }
    return out;
}

AffineSpace exact_affine_solutions(const Poly& offset, const std::vector<Poly>& cands,
                                   const std::function<Poly(const Poly&)>& residual,
                                   const Field& F) {
    const Poly r0 = residual(offset);
    std::vector<Poly> dirs(cands.size()), rdirs(cands.size());
    size_t rows = r0.size();
    for (size_t i = 0; i < cands.size(); ++i) {
        dirs[i] = poly_sub(cands[i], offset, F);
        rdirs[i] = poly_sub(residual(cands[i]), r0, F);
        rows = std::max(rows, rdirs[i].size());
    }
    Mat a(rows, std::vector<u32>(cands.size(), 0));
    std::vector<u32> b(rows, 0);
    for (size_t r = 0; r < rows; ++r) {
        for (size_t i = 0; i < cands.size(); ++i) a[r][i] = poly_coeff(rdirs[i], r);
        b[r] = F.neg(poly_coeff(r0, r));
    }
    const AffineSolve sol = solve_affine(std::move(a), std::move(b), cands.size(), F);
    if (!sol.consistent) return AffineSpace::empty();
    AffineSpace out;
    out.offset = offset;
    for (size_t i = 0; i < cands.size(); ++i)
        if (sol.particular[i] != 0)
            out.offset = poly_add(out.offset, poly_scale(dirs[i], sol.particular[i], F), F);
    for (const auto& v : sol.null_basis) {
        Poly dir;
        for (size_t i = 0; i < cands.size(); ++i)
            if (v[i] != 0) dir = poly_add(dir, poly_scale(dirs[i], v[i], F), F);
        if (!poly_is_zero(dir)) out.directions.push_back(std::move(dir));
    }
    return out;
}

std::vector<Poly> affine_enumerate(const AffineSpace& s, const Field& F) {
    if (s.none) return {};
    const AffineSpace r = affine_reduce(s, F);
    const size_t dim = r.directions.size();
    u64 count = 1;
    for (size_t i = 0; i < dim; ++i) {
        count *= F.p;
        if (count > (u64(1) << 22)) throw ValidationError("affine space too large to enumerate");
    }
    std::vector<Poly> out;
    out.reserve(count);
    std::vector<u32> digits(dim, 0);
    for (u64 it = 0; it < count; ++it) {
        Poly f = r.offset;
        for (size_t i = 0; i < dim; ++i)
            if (digits[i] != 0) f = poly_add(f, poly_scale(r.directions[i], digits[i], F), F);
        out.push_back(std::move(f));
        for (size_t i = 0; i < dim; ++i) {
            if (++digits[i] < F.p) break;
            digits[i] = 0;
        }
    }
    return out;
}

}  // namespace mercode
