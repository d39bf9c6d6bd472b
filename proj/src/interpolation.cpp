#include "mercode/interpolation.hpp"

#include <algorithm>

#include "mercode/errors.hpp"

namespace mercode {

// evaluation points of a folded code, column-major: g^0, g^1, .., g^(sn-1)
static std::vector<u32> folded_points(const CodeParams& cp) {
    std::vector<u32> pts(cp.n * cp.s);
    u32 g = 1;
    for (size_t j = 0; j < pts.size(); ++j) {
        pts[j] = g;
        g = cp.F.mul(g, cp.gamma);
    }
    return pts;
}

static void check_word_shape(const CodeParams& cp, const Codeword& w) {
    if (w.size() != cp.n) throw DimensionMismatch("column count");
    for (const auto& col : w)
        if (col.size() != cp.s) throw DimensionMismatch("column height");
}

// full received-word interpolant: degree < s*n, matches every column entry
static Poly word_interpolant(const CodeParams& cp, const HermiteSystem& full, const Codeword& w) {
    if (cp.kind == CodeKind::Mult) return full.interpolate(w, cp.F);
    std::vector<std::vector<u32>> vals(cp.n * cp.s, std::vector<u32>(1));
    for (size_t i = 0; i < cp.n; ++i)
        for (size_t k = 0; k < cp.s; ++k) vals[i * cp.s + k][0] = w[i][k];
    return full.interpolate(vals, cp.F);
}

static size_t pick_minimal_row(const MinimalBasis& mb) {
    size_t best = 0;
    for (size_t i = 1; i < mb.k; ++i)
        if (mb.sdeg[i] < mb.sdeg[best]) best = i;
    return best;
}

// Columns whose whole jet matches f, from one remainder push of f.
static size_t word_agreement(const CodeParams& cp, const HermiteSystem& full, const Poly& f,
                             const Codeword& w) {
    check_word_shape(cp, w);
    const Field& F = cp.F;
    std::vector<Poly> tay = full.taylor_remainders(f, F);
    const std::vector<u32>& fact = factorials(F, cp.s).fact;
    size_t agree = 0;
    for (size_t i = 0; i < cp.n; ++i) {
        bool ok = true;
        for (size_t k = 0; k < cp.s && ok; ++k) {
            u32 have = cp.kind == CodeKind::Mult ? F.mul(poly_coeff(tay[i], k), fact[k])
                                                 : poly_coeff(tay[i * cp.s + k], 0);
            ok = have == w[i][k];
        }
        agree += ok;
    }
    return agree;
}

CapacityInterpolator::CapacityInterpolator(const CodeParams& cp, int m) : cp_(cp), m_(m) {
    validate_code(cp_);
    if (m < 1 || size_t(m) >= cp.s)
        throw ValidationError("operator order must satisfy 1 <= m < s");
    const i64 max_deg = i64(cp_.n) * i64(cp_.s) - 1;
    if (cp_.kind == CodeKind::Mult) {
        full_ = std::make_unique<HermiteSystem>(cp_.alphas, int(cp_.s), cp_.F);
        std::vector<std::vector<int>> mults{std::vector<int>(cp_.n, int(cp_.s) - m)};
        engine_ = std::make_unique<CongruenceEngine>(size_t(m) + 2, cp_.alphas, std::move(mults),
                                                     cp_.F, max_deg);
    } else {
        std::vector<u32> pts = folded_points(cp_);
        full_ = std::make_unique<HermiteSystem>(pts, 1, cp_.F);
        // agreement on column i pins f at g^(si+k) for k < s-m only: the m
        // dilated copies still stay inside the column there
        std::vector<u32> cpts;
        cpts.reserve(cp_.n * (cp_.s - size_t(m)));
        for (size_t i = 0; i < cp_.n; ++i)
            for (size_t k = 0; k + size_t(m) < cp_.s; ++k) cpts.push_back(pts[i * cp_.s + k]);
        std::vector<std::vector<int>> mults{std::vector<int>(cpts.size(), 1)};
        engine_ = std::make_unique<CongruenceEngine>(size_t(m) + 2, std::move(cpts),
                                                     std::move(mults), cp_.F, max_deg);
    }
}

CapacityInterpolator::Result CapacityInterpolator::run(const Codeword& w) const {
    check_word_shape(cp_, w);
    const Field& F = cp_.F;
    Result res;
    res.a = word_interpolant(cp_, *full_, w);

    const size_t k = size_t(m_) + 2;
    std::vector<std::vector<Poly>> fcols(1, std::vector<Poly>(k));
    if (cp_.kind == CodeKind::Mult) {
        std::vector<Poly> der = derivative_batch(res.a, m_, F);
        for (int i = 0; i <= m_; ++i) fcols[0][size_t(i)] = std::move(der[size_t(i)]);
    } else {
        for (int i = 0; i <= m_; ++i) fcols[0][size_t(i)] = dilate_poly(res.a, cp_.gamma, u64(i), F);
    }
    fcols[0][k - 1] = Poly{1};

    MinimalBasis mb = engine_->solve(fcols, std::vector<i64>(k, 0));
    const size_t best = pick_minimal_row(mb);
    res.op.q.assign(mb.rows.begin() + i64(best * mb.k), mb.rows.begin() + i64(best * mb.k + k - 1));
    res.op.qfree = mb.at(best, k - 1);
    i64 dmax = poly_deg(res.op.qfree);
    for (const Poly& part : res.op.q) dmax = std::max(dmax, poly_deg(part));
    res.op.x_degree_bound = dmax;
    return res;
}

size_t CapacityInterpolator::agreement(const Poly& f, const Codeword& w) const {
    return word_agreement(cp_, *full_, f, w);
}

JohnsonInterpolator::JohnsonInterpolator(const CodeParams& cp, int r, int u)
    : cp_(cp), r_(r), u_(u) {
    validate_code(cp_);
    if (r < 1 || u < 1) throw ValidationError("vanishing order and y-degree must be positive");
    std::vector<u32> pts;
    int unit = 0;  // per-point multiplicity in column t is unit*(r - t)
    if (cp_.kind == CodeKind::Mult) {
        full_ = std::make_unique<HermiteSystem>(cp_.alphas, int(cp_.s), cp_.F);
        pts = cp_.alphas;
        unit = int(cp_.s);
    } else {
        pts = folded_points(cp_);
        full_ = std::make_unique<HermiteSystem>(pts, 1, cp_.F);
        unit = 1;
    }
    std::vector<std::vector<int>> mults(size_t(r), std::vector<int>(pts.size()));
    for (int t = 0; t < r; ++t)
        for (size_t j = 0; j < pts.size(); ++j) mults[size_t(t)][j] = unit * (r - t);
    m0_ = vanishing_poly(pts, unit * r, cp_.F);
    const i64 max_in = i64(poly_deg(m0_)) - 1;
    // every power is reduced before the next multiply, so a quotient never
    // exceeds deg a < s*n coefficients
    const size_t qlen = cp_.n * cp_.s;
    Poly rev = m0_;
    std::reverse(rev.begin(), rev.end());
    m0_inv_ = poly_inv_series(rev, qlen, cp_.F);
    m0_inv_.resize(qlen, 0);
    engine_ = std::make_unique<CongruenceEngine>(size_t(u) + 1, std::move(pts), std::move(mults),
                                                 cp_.F, max_in);
}

JohnsonInterpolator::Result JohnsonInterpolator::run(const Codeword& w) const {
    check_word_shape(cp_, w);
    const Field& F = cp_.F;
    Result res;
    res.a = word_interpolant(cp_, *full_, w);

    // powers of the interpolant mod the largest column modulus
    std::vector<Poly> pw(size_t(u_) + 1);
    pw[0] = Poly{1};
    for (int e = 1; e <= u_; ++e) {
        Poly prod = poly_mul(pw[size_t(e) - 1], res.a, F);
        if (poly_deg(prod) >= poly_deg(m0_)) prod = poly_divmod_pre(prod, m0_, m0_inv_, F).rem;
        pw[size_t(e)] = std::move(prod);
    }

    const size_t k = size_t(u_) + 1;
    const size_t cols = size_t(r_);
    std::vector<std::vector<Poly>> fcols(cols, std::vector<Poly>(k));
    for (int t = 0; t < r_; ++t)
        for (int i = t; i <= u_; ++i)
            fcols[size_t(t)][size_t(i)] =
                poly_scale(pw[size_t(i - t)], binomial(F, u64(i), u64(t)), F);

    std::vector<i64> shift(k);
    for (size_t i = 0; i < k; ++i) shift[i] = i64(i) * cp_.d;
    MinimalBasis mb = engine_->solve(fcols, shift);
    const size_t best = pick_minimal_row(mb);
    res.q.cy.assign(mb.rows.begin() + i64(best * mb.k), mb.rows.begin() + i64((best + 1) * mb.k));
    res.weighted_degree = 0;
    for (size_t t = 0; t < k; ++t)
        if (!poly_is_zero(res.q.cy[t]))
            res.weighted_degree = std::max(res.weighted_degree, poly_deg(res.q.cy[t]) + i64(t) * cp_.d);
    return res;
}

size_t JohnsonInterpolator::agreement(const Poly& f, const Codeword& w) const {
    return word_agreement(cp_, *full_, f, w);
}

}  // namespace mercode
