#include "mercode/operators.hpp"

#include "mercode/errors.hpp"

namespace mercode {

Poly apply_derivative(const AffineOperator& op, const Poly& f, const Field& F) {
    std::vector<Poly> der = derivative_batch(f, op.y_order(), F);
    Poly acc = op.qfree;
    for (size_t i = 0; i < op.q.size(); ++i)
        acc = poly_add(acc, poly_mul(op.q[i], der[i], F), F);
    return acc;
}

Poly dilate_poly(const Poly& f, u32 gamma, u64 power, const Field& F) {
    const u32 g = F.pow(gamma, power);
    Poly out(f.size());
    u32 gj = 1;
    for (size_t j = 0; j < f.size(); ++j) {
        out[j] = F.mul(f[j], gj);
        gj = F.mul(gj, g);
    }
    poly_trim(out);
    return out;
}

Poly apply_folded(const AffineOperator& op, const Poly& f, u32 gamma, const Field& F) {
    Poly acc = op.qfree;
    for (size_t i = 0; i < op.q.size(); ++i)
        acc = poly_add(acc, poly_mul(op.q[i], dilate_poly(f, gamma, i, F), F), F);
    return acc;
}

AffineOperator differentiate_operator(const AffineOperator& op, const Field& F) {
    const size_t m1 = op.q.size();  // m+1
    AffineOperator out;
    out.qfree = poly_derivative(op.qfree, F);
    out.q.resize(m1 + 1);
    // product rule: part i collects q_i' (from y_i staying put) and q_{i-1}
    // (from y_{i-1} advancing one derivative order)
    for (size_t i = 0; i <= m1; ++i) {
        Poly part = i < m1 ? poly_derivative(op.q[i], F) : Poly{};
        if (i > 0) part = poly_add(part, op.q[i - 1], F);
        out.q[i] = std::move(part);
    }
    out.x_degree_bound = op.x_degree_bound;
    return out;
}

AffineOperator dilate_operator(const AffineOperator& op, u32 gamma, const Field& F) {
    const size_t m1 = op.q.size();
    AffineOperator out;
    out.qfree = dilate_poly(op.qfree, gamma, 1, F);
    out.q.resize(m1 + 1);
    out.q[0] = Poly{};  // Q(gamma x, ...) never reads f(x) itself
    for (size_t i = 0; i < m1; ++i) out.q[i + 1] = dilate_poly(op.q[i], gamma, 1, F);
    out.x_degree_bound = op.x_degree_bound;
    return out;
}

AffineOperator conjugate_operator(const AffineOperator& op, u64 n, const Field& F) {
    const int m = op.y_order();
    if (m < 0) throw NoYSupport();
    const u32 nr = F.reduce(n);
    AffineOperator out;
    out.q.resize(size_t(m) + 1);
    for (int i = 0; i <= m; ++i) {
        Poly part;
        for (int j = i; j <= m; ++j) {
            const u32 c = F.mul(falling_factorial(F, nr, u64(j - i)), binomial(F, u64(j), u64(i)));
            if (c == 0) continue;
            Poly term = poly_scale(op.q[size_t(j)], c, F);
            part = poly_add(part, poly_shift_up(term, size_t(m - j)), F);
        }
        out.q[size_t(i)] = poly_shift_up(part, size_t(i));
    }
    out.x_degree_bound = op.x_degree_bound + m;
    return out;
}

FoldedSpectrum folded_spectrum(const AffineOperator& op, const Field& F) {
    (void)F;
    FoldedSpectrum sp;
    for (size_t i = 0; i < op.q.size(); ++i) {
        const u32 c = poly_coeff(op.q[i], 0);
        if (c == 0) continue;
        sp.support.push_back(int(i));
        if (sp.char_poly.size() <= i) sp.char_poly.resize(i + 1, 0);
        sp.char_poly[i] = c;
    }
    return sp;
}

std::vector<int> folded_zero_set(const AffineOperator& op, u32 gamma, size_t k, const Field& F) {
    const FoldedSpectrum sp = folded_spectrum(op, F);
    std::vector<int> zeros;
    u32 g = 1;
    for (size_t i = 0; i < k; ++i) {
        if (poly_eval(sp.char_poly, g, F) == 0) zeros.push_back(int(i));
        g = F.mul(g, gamma);
    }
    return zeros;
}

static AffineOperator drop_zero_tops(const AffineOperator& op) {
    AffineOperator out = op;
    while (!out.q.empty() && poly_is_zero(out.q.back())) out.q.pop_back();
    if (out.q.empty()) throw NoYSupport();
    return out;
}

NormalizedDerivative normalize_derivative(const AffineOperator& op, const Field& F) {
    NormalizedDerivative nd;
    nd.op = drop_zero_tops(op);
    nd.m_eff = nd.op.y_order();
    const Poly& top = nd.op.q.back();
    u32 beta = 0;
    while (poly_eval(top, beta, F) == 0) ++beta;  // deg top < p, so some beta works
    nd.beta = beta;
    if (beta != 0) {
        for (Poly& part : nd.op.q) part = taylor_shift(part, beta, F);
        nd.op.qfree = taylor_shift(nd.op.qfree, beta, F);
    }
    return nd;
}

NormalizedFolded normalize_folded(const AffineOperator& op, const Field& F) {
    (void)F;
    NormalizedFolded nf;
    nf.op = drop_zero_tops(op);
    nf.m_eff = nf.op.y_order();
    size_t v = SIZE_MAX;
    auto valuation = [&](const Poly& f) {
        if (poly_is_zero(f)) return;
        size_t w = 0;
        while (f[w] == 0) ++w;
        v = std::min(v, w);
    };
    for (const Poly& part : nf.op.q) valuation(part);
    valuation(nf.op.qfree);
    nf.x_valuation = v;
    if (v > 0) {
        for (Poly& part : nf.op.q) part = poly_shift_down(part, v);
        nf.op.qfree = poly_shift_down(nf.op.qfree, v);
        nf.op.x_degree_bound -= i64(v);
    }
    bool y_const = false;
    for (const Poly& part : nf.op.q)
        if (poly_coeff(part, 0) != 0) y_const = true;
    // only the y-free part survives at x = 0: the equation forces a nonzero
    // constant to vanish, so no polynomial solution exists
    if (!y_const) throw NoSolution();
    return nf;
}

}  // namespace mercode
