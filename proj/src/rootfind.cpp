#include "mercode/rootfind.hpp"

#include <algorithm>

#include "mercode/errors.hpp"
#include "mercode/rng.hpp"

namespace mercode {

Poly bivariate_eval(const BivariatePoly& q, const Poly& f, const Field& F) {
    Poly acc;
    for (size_t t = q.cy.size(); t-- > 0;) {
        acc = poly_mul(acc, f, F);
        acc = poly_add(acc, q.cy[t], F);
    }
    return acc;
}

// g monic squarefree product of distinct linear factors
static void cz_split(const Poly& g, const Field& F, Rng& rng, std::vector<u32>& out) {
    const i64 dg = poly_deg(g);
    if (dg <= 0) return;
    if (dg == 1) {
        out.push_back(F.mul(F.neg(g[0]), F.inv(g[1])));
        return;
    }
    const u64 e = (u64(F.p) - 1) / 2;
    for (;;) {
        const Poly xa{u32(rng.below(F.p)), 1};
        Poly h = poly_sub(poly_powmod(xa, e, g, F), Poly{1}, F);
        Poly d = poly_gcd(h, g, F);
        const i64 dd = poly_deg(d);
        if (dd > 0 && dd < dg) {
            cz_split(d, F, rng, out);
            cz_split(poly_div(g, d, F), F, rng, out);
            return;
        }
    }
}

std::vector<u32> univariate_roots(const Poly& f, const Field& F, u64 seed) {
    if (poly_is_zero(f)) throw ZeroPolynomial();
    std::vector<u32> out;
    const i64 df = poly_deg(f);
    if (df == 0) return out;
    if (u64(F.p) * u64(df) <= (u64(1) << 26)) {
        for (u32 x = 0; x < F.p; ++x)
            if (poly_eval(f, x, F) == 0) out.push_back(x);
        return out;
    }
    const Poly x{0, 1};
    Poly g = poly_gcd(poly_sub(poly_powmod(x, F.p, f, F), x, F), f, F);
    if (poly_deg(g) <= 0) return out;
    Rng rng(mix_seed(seed, 0x726f6f7473ull));
    cz_split(g, F, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

static void trim_y(std::vector<Poly>& cy) {
    while (!cy.empty() && poly_is_zero(cy.back())) cy.pop_back();
}

// Search f = prefix + x^k * (next coefficients) with Q(x, f) = 0. The
// substituted Q stays nonzero, so each level branches on the finitely many
// roots of Q(0, y) and a leaf accepts exactly when y = 0 solves what is left.
static void rr_rec(std::vector<Poly> cy, i64 k, i64 dmax, std::vector<u32>& prefix, const Field& F,
                   u64 seed, std::vector<Poly>& found) {
    trim_y(cy);
    if (cy.empty()) return;  // unreachable, substitutions preserve nonzeroness
    if (k > dmax) {
        if (poly_is_zero(cy[0])) {
            Poly f(prefix);
            poly_trim(f);
            found.push_back(std::move(f));
        }
        return;
    }
    size_t v = SIZE_MAX;
    for (const Poly& c : cy) {
        if (poly_is_zero(c)) continue;
        size_t w = 0;
        while (c[w] == 0) ++w;
        v = std::min(v, w);
    }
    if (v > 0)
        for (Poly& c : cy) c = poly_shift_down(c, v);
    Poly q0(cy.size());
    for (size_t t = 0; t < cy.size(); ++t) q0[t] = poly_coeff(cy[t], 0);
    poly_trim(q0);
    for (u32 rho : univariate_roots(q0, F, seed)) {
        std::vector<Poly> sub(cy.size());
        for (size_t j = 0; j < cy.size(); ++j) {
            Poly acc;
            u32 rpow = 1;  // rho^(i-j)
            for (size_t i = j; i < cy.size(); ++i) {
                acc = poly_add(acc, poly_scale(cy[i], F.mul(binomial(F, i, j), rpow), F), F);
                rpow = F.mul(rpow, rho);
            }
            sub[j] = poly_shift_up(acc, j);
        }
        prefix.push_back(rho);
        rr_rec(std::move(sub), k + 1, dmax, prefix, F, seed, found);
        prefix.pop_back();
    }
}

std::vector<Poly> bivariate_roots(const BivariatePoly& q, i64 dmax, const Field& F, u64 seed) {
    if (q.zero()) throw ZeroPolynomial();
    if (dmax < 0) return {};
    std::vector<u32> prefix;
    std::vector<Poly> found;
    rr_rec(q.cy, 0, dmax, prefix, F, seed, found);
    std::vector<Poly> out;
    for (Poly& f : found)
        if (poly_is_zero(bivariate_eval(q, f, F))) out.push_back(std::move(f));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace mercode
