#include "mercode/odesolve.hpp"

#include "mercode/errors.hpp"

namespace mercode {

static Poly forced_rec(AffineOperator q, Poly b, u64 n, size_t k, const Field& F) {
    const int m = q.y_order();
    for (Poly& part : q.q) part = poly_trunc(part, k);
    b = poly_trunc(b, k);
    if (k == 1) {
        const u32 diag =
            F.mul(falling_factorial(F, F.reduce(n), u64(m)), poly_coeff(q.q.back(), 0));
        if (diag == 0) throw CharacteristicTooSmall("vanishing diagonal in forced solve");
        const u32 c = F.mul(F.neg(poly_coeff(b, 0)), F.inv(diag));
        return c == 0 ? Poly{} : Poly{c};
    }
    const size_t l = k / 2;
    Poly h = forced_rec(q, b, n, l, F);
    // residual of the low half is divisible by x^l by construction
    const AffineOperator cn = conjugate_operator(q, n, F);
    const std::vector<Poly> dh = derivative_batch(h, m, F);
    Poly r = b;
    for (int i = 0; i <= m; ++i)
        r = poly_add(r, poly_mul_trunc(cn.q[size_t(i)], dh[size_t(i)], k, F), F);
    r = poly_shift_down(r, l);
    Poly f1 = forced_rec(std::move(q), std::move(r), n + l, k - l, F);
    return poly_add(h, poly_shift_up(f1, l), F);
}

Poly solve_forced(const AffineOperator& q, const Poly& b, u64 n, size_t k, const Field& F) {
    if (k == 0) throw ValidationError("forced solve needs positive precision");
    if (q.q.empty() || poly_coeff(q.q.back(), 0) == 0) throw NotNormalized();
    return forced_rec(q, b, n, k, F);
}

AffineSpace solve_derivative_equation(const AffineOperator& op, i64 d, const Field& F) {
    const NormalizedDerivative nd = normalize_derivative(op, F);
    const int m = nd.m_eff;
    if (d < m) throw DegreeTooSmall();
    const size_t k = size_t(d - m) + 1;

    // candidate with low part L solves the equation mod x^(d-m+1); the low
    // part has m free coefficients
    auto candidate = [&](const Poly& low) {
        const Poly b = apply_derivative(nd.op, low, F);
        return poly_add(low, poly_shift_up(solve_forced(nd.op, b, u64(m), k, F), size_t(m)), F);
    };
    const Poly f0 = candidate(Poly{});
    std::vector<Poly> cands;
    for (int i = 0; i < m; ++i) {
        Poly low(size_t(i) + 1, 0);
        low[size_t(i)] = 1;
        cands.push_back(candidate(low));
    }
    AffineSpace sp = exact_affine_solutions(
        f0, cands, [&](const Poly& f) { return apply_derivative(nd.op, f, F); }, F);
    if (!sp.none && nd.beta != 0) {
        const u32 back = F.neg(nd.beta);
        sp.offset = taylor_shift(sp.offset, back, F);
        for (Poly& dir : sp.directions) dir = taylor_shift(dir, back, F);
    }
    return sp;
}

AffineSpace triangular_derivative_solve(const AffineOperator& op, i64 d, const Field& F) {
    const NormalizedDerivative nd = normalize_derivative(op, F);
    const int m = nd.m_eff;
    if (d < m) throw DegreeTooSmall();
    const auto& q = nd.op.q;

    // row r of qfree + sum q_i f^(i) determines f_(r+m); f_0..f_(m-1) free
    auto candidate = [&](const Poly& low) {
        Poly f = low;
        f.resize(size_t(d) + 1, 0);
        for (i64 r = 0; r + m <= d; ++r) {
            u32 acc = poly_coeff(nd.op.qfree, size_t(r));
            for (int i = 0; i <= m; ++i)
                for (i64 j = i; j < r + m; ++j) {
                    const i64 ci = r - j + i;
                    if (ci < 0) continue;
                    const u32 qc = poly_coeff(q[size_t(i)], size_t(ci));
                    if (qc == 0) continue;
                    const u32 ff = falling_factorial(F, F.reduce(u64(j)), u64(i));
                    acc = F.add(acc, F.mul(F.mul(qc, ff), f[size_t(j)]));
                }
            const u32 diag =
                F.mul(falling_factorial(F, F.reduce(u64(r + m)), u64(m)), poly_coeff(q.back(), 0));
            if (diag == 0) throw CharacteristicTooSmall("vanishing diagonal in forward solve");
            f[size_t(r + m)] = F.mul(F.neg(acc), F.inv(diag));
        }
        poly_trim(f);
        return f;
    };
    const Poly f0 = candidate(Poly{});
    std::vector<Poly> cands;
    for (int i = 0; i < m; ++i) {
        Poly low(size_t(i) + 1, 0);
        low[size_t(i)] = 1;
        cands.push_back(candidate(low));
    }
    AffineSpace sp = exact_affine_solutions(
        f0, cands, [&](const Poly& f) { return apply_derivative(nd.op, f, F); }, F);
    if (!sp.none && nd.beta != 0) {
        const u32 back = F.neg(nd.beta);
        sp.offset = taylor_shift(sp.offset, back, F);
        for (Poly& dir : sp.directions) dir = taylor_shift(dir, back, F);
    }
    return sp;
}

}  // namespace mercode
