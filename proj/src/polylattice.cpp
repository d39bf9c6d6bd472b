#include "mercode/polylattice.hpp"

#include <algorithm>

namespace mercode {

i64 vec_degree(const PolyVec& v) {
    i64 d = kZeroPolyDeg;
    for (const Poly& f : v) d = std::max(d, poly_deg(f));
    return d;
}

size_t leading_coordinate(const PolyVec& v) {
    i64 d = vec_degree(v);
    if (d == kZeroPolyDeg) throw ZeroVector();
    for (size_t i = v.size(); i-- > 0;)
        if (poly_deg(v[i]) == d) return i;
    throw ZeroVector();  // unreachable
}

bool is_reduced(const LatticeBasis& b) {
    std::vector<char> seen;
    for (const PolyVec& v : b) {
        size_t lc = leading_coordinate(v);
        if (lc >= seen.size()) seen.resize(lc + 1, 0);
        if (seen[lc]) return false;
        seen[lc] = 1;
    }
    return true;
}

LatticeBasis reduce_basis(LatticeBasis b, const Field& F) {
    if (b.empty()) return b;
    size_t width = b[0].size();
    for (const PolyVec& v : b)
        if (v.size() != width) throw DimensionMismatch("ragged basis");

    for (;;) {
        // Find a colliding pair of leading coordinates.
        std::vector<i64> owner(width, -1);
        size_t ra = b.size(), rb = b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            if (vec_degree(b[i]) == kZeroPolyDeg) throw DegenerateBasis();
            size_t lc = leading_coordinate(b[i]);
            if (owner[lc] >= 0) {
                ra = size_t(owner[lc]);
                rb = i;
                break;
            }
            owner[lc] = i64(i);
        }
        if (rb == b.size()) return b;  // all leading coordinates distinct

        // Decide which row gets reduced: higher degree, ties to lower index.
        i64 da = vec_degree(b[ra]), db = vec_degree(b[rb]);
        size_t tgt = da > db ? ra : (db > da ? rb : std::min(ra, rb));
        size_t src = tgt == ra ? rb : ra;
        size_t lc = leading_coordinate(b[tgt]);
        i64 delta = vec_degree(b[tgt]) - vec_degree(b[src]);
        u32 c = F.mul(poly_lead(b[tgt][lc]), F.inv(poly_lead(b[src][lc])));
        for (size_t j = 0; j < width; ++j) {
            Poly t = poly_shift_up(poly_scale(b[src][j], c, F), size_t(delta));
            b[tgt][j] = poly_sub(b[tgt][j], t, F);
        }
    }
}

PolyVec shortest_vector(const LatticeBasis& b, const Field& F) {
    if (b.empty()) throw DegenerateBasis("empty basis");
    LatticeBasis r = reduce_basis(b, F);
    size_t best = 0;
    for (size_t i = 1; i < r.size(); ++i) {
        i64 di = vec_degree(r[i]), db = vec_degree(r[best]);
        if (di < db || (di == db && leading_coordinate(r[i]) < leading_coordinate(r[best])))
            best = i;
    }
    return r[best];
}

namespace {

bool is_triangular(const LatticeBasis& b, bool lower) {
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = 0; j < b[i].size(); ++j) {
            bool off = lower ? j > i : j < i;
            if (off && !poly_is_zero(b[i][j])) return false;
        }
    return true;
}

}  // namespace

i64 det_degree(const LatticeBasis& b, const Field& F) {
    size_t k = b.size();
    if (k == 0) return 0;
    for (const PolyVec& v : b)
        if (v.size() != k) throw DimensionMismatch("determinant needs a square basis");

    if (is_triangular(b, true) || is_triangular(b, false)) {
        i64 sum = 0;
        for (size_t i = 0; i < k; ++i) {
            i64 d = poly_deg(b[i][i]);
            if (d == kZeroPolyDeg) return kZeroPolyDeg;
            sum += d;
        }
        return sum;
    }

    // Evaluation-interpolation: evaluate at enough points to pin the degree.
    i64 bound = 0;
    for (const PolyVec& v : b) {
        i64 d = vec_degree(v);
        if (d > 0) bound += d;
    }
    if (u64(bound) + 1 > F.p)
        throw ValidationError("determinant degree bound exceeds the field size");
    size_t npts = size_t(bound) + 1;
    std::vector<u32> dets(npts);
    std::vector<std::vector<u32>> m(k, std::vector<u32>(k));
    for (size_t t = 0; t < npts; ++t) {
        u32 x = u32(t);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) m[i][j] = poly_eval(b[i][j], x, F);
        // Gaussian elimination determinant.
        u32 det = 1;
        auto mm = m;
        for (size_t c = 0; c < k && det != 0; ++c) {
            size_t piv = c;
            while (piv < k && mm[piv][c] == 0) ++piv;
            if (piv == k) {
                det = 0;
                break;
            }
            if (piv != c) {
                std::swap(mm[piv], mm[c]);
                det = F.neg(det);
            }
            det = F.mul(det, mm[c][c]);
            u32 inv = F.inv(mm[c][c]);
            for (size_t r = c + 1; r < k; ++r) {
                if (mm[r][c] == 0) continue;
                u32 f = F.mul(mm[r][c], inv);
                for (size_t cc = c; cc < k; ++cc)
                    mm[r][cc] = F.sub(mm[r][cc], F.mul(f, mm[c][cc]));
            }
        }
        dets[t] = det;
    }
    // Highest nonzero coefficient of the interpolated determinant.
    std::vector<u32> pts(npts);
    for (size_t t = 0; t < npts; ++t) pts[t] = u32(t);
    Poly d = interpolate(pts, dets, F);
    return poly_deg(d);
}

}  // namespace mercode
