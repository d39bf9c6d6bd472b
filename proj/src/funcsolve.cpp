#include "mercode/funcsolve.hpp"

#include "mercode/errors.hpp"

namespace mercode {

static Poly pinned_rec(AffineOperator q, Poly b, u32 gamma, size_t k, int pin, const Field& F) {
    const int m = q.y_order();
    for (Poly& part : q.q) part = poly_trunc(part, k);
    b = poly_trunc(b, k);
    if (k == 1) {
        u32 diag = 0;
        for (const Poly& part : q.q) diag = F.add(diag, poly_coeff(part, 0));
        if (diag != 0) {
            const u32 c = F.mul(F.neg(poly_coeff(b, 0)), F.inv(diag));
            return c == 0 ? Poly{} : Poly{c};
        }
        return pin == 0 ? Poly{1} : Poly{};
    }
    const size_t l = k / 2;
    Poly h = pinned_rec(q, b, gamma, l, pin < int(l) ? pin : -1, F);
    // consistent rows of the low half leave a residual divisible by x^l;
    // inconsistent ones are dropped here and caught by the caller's verify
    Poly r = b;
    for (int i = 0; i <= m; ++i)
        r = poly_add(r, poly_mul_trunc(q.q[size_t(i)], dilate_poly(h, gamma, u64(i), F), k, F), F);
    r = poly_shift_down(r, l);
    // substituting f = h + x^l g dilates g's parts by gamma^(i l)
    for (int i = 0; i <= m; ++i)
        q.q[size_t(i)] = poly_scale(q.q[size_t(i)], F.pow(gamma, u64(i) * l), F);
    Poly f1 = pinned_rec(std::move(q), std::move(r), gamma, k - l, pin >= int(l) ? pin - int(l) : -1, F);
    return poly_add(h, poly_shift_up(f1, l), F);
}

Poly solve_pinned(const AffineOperator& q, const Poly& b, u32 gamma, size_t k, int pin,
                  const Field& F) {
    if (k == 0) throw ValidationError("pinned solve needs positive precision");
    bool ok = false;
    for (const Poly& part : q.q)
        if (poly_coeff(part, 0) != 0) ok = true;
    if (!ok) throw NotNormalized();
    return pinned_rec(q, b, gamma, k, pin, F);
}

AffineSpace solve_folded_equation(const AffineOperator& op, u32 gamma, i64 d, const Field& F) {
    if (d < 0) throw DegreeTooSmall();
    if (F.order(gamma) <= u64(d)) throw OrderTooSmall();
    NormalizedFolded nf;
    try {
        nf = normalize_folded(op, F);
    } catch (const NoSolution&) {
        return AffineSpace::empty();
    }
    const size_t k = size_t(d) + 1;
    const std::vector<int> zeros = folded_zero_set(nf.op, gamma, k, F);
    const Poly fm1 = solve_pinned(nf.op, nf.op.qfree, gamma, k, -1, F);
    std::vector<Poly> cands;
    for (int t : zeros) cands.push_back(solve_pinned(nf.op, nf.op.qfree, gamma, k, t, F));
    return exact_affine_solutions(
        fm1, cands, [&](const Poly& f) { return apply_folded(nf.op, f, gamma, F); }, F);
}

AffineSpace triangular_folded_solve(const AffineOperator& op, u32 gamma, i64 d, const Field& F) {
    if (d < 0) throw DegreeTooSmall();
    if (F.order(gamma) <= u64(d)) throw OrderTooSmall();
    NormalizedFolded nf;
    try {
        nf = normalize_folded(op, F);
    } catch (const NoSolution&) {
        return AffineSpace::empty();
    }
    const int m = nf.m_eff;
    const auto& q = nf.op.q;
    std::vector<u32> gpow(size_t(d) + 1);
    gpow[0] = 1;
    for (i64 j = 1; j <= d; ++j) gpow[size_t(j)] = F.mul(gpow[size_t(j) - 1], gamma);
    std::vector<u32> diag(size_t(d) + 1);
    std::vector<int> zeros;
    for (i64 j = 0; j <= d; ++j) {
        u32 v = 0, zp = 1;  // gamma^(i j) running over i
        for (int i = 0; i <= m; ++i) {
            v = F.add(v, F.mul(poly_coeff(q[size_t(i)], 0), zp));
            zp = F.mul(zp, gpow[size_t(j)]);
        }
        diag[size_t(j)] = v;
        if (v == 0) zeros.push_back(int(j));
    }

    auto candidate = [&](int pin) {
        Poly f(size_t(d) + 1, 0);
        for (i64 j = 0; j <= d; ++j) {
            u32 acc = poly_coeff(nf.op.qfree, size_t(j));
            for (i64 jp = 0; jp < j; ++jp) {
                if (f[size_t(jp)] == 0) continue;
                u32 cur = f[size_t(jp)];  // f_jp * gamma^(i jp), i ascending
                for (int i = 0; i <= m; ++i) {
                    acc = F.add(acc, F.mul(poly_coeff(q[size_t(i)], size_t(j - jp)), cur));
                    cur = F.mul(cur, gpow[size_t(jp)]);
                }
            }
            if (diag[size_t(j)] != 0)
                f[size_t(j)] = F.mul(F.neg(acc), F.inv(diag[size_t(j)]));
            else
                f[size_t(j)] = (int(j) == pin) ? 1 : 0;  // inconsistency caught later
        }
        poly_trim(f);
        return f;
    };
    const Poly fm1 = candidate(-1);
    std::vector<Poly> cands;
    for (int t : zeros) cands.push_back(candidate(t));
    return exact_affine_solutions(
        fm1, cands, [&](const Poly& f) { return apply_folded(nf.op, f, gamma, F); }, F);
}

}  // namespace mercode
