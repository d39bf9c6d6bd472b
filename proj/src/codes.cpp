#include "mercode/codes.hpp"

#include <algorithm>

#include "mercode/errors.hpp"

namespace mercode {

CodeParams make_mult_code(u32 p, size_t n, size_t s, i64 d) {
    std::vector<u32> alphas(n);
    for (size_t j = 0; j < n; ++j) alphas[j] = u32(j);
    return make_mult_code(p, std::move(alphas), s, d);
}

CodeParams make_mult_code(u32 p, std::vector<u32> alphas, size_t s, i64 d) {
    CodeParams cp{CodeKind::Mult, Field(p), alphas.size(), s, d, 0, std::move(alphas)};
    validate_code(cp);
    return cp;
}

CodeParams make_frs_code(u32 p, size_t n, size_t s, i64 d) {
    Field F(p);
    CodeParams cp{CodeKind::Folded, F, n, s, d, F.generator, {}};
    cp.alphas.resize(n);
    for (size_t i = 0; i < n; ++i) cp.alphas[i] = F.pow(cp.gamma, u64(s) * i);
    validate_code(cp);
    return cp;
}

void validate_code(const CodeParams& cp) {
    const Field& F = cp.F;
    if (cp.n == 0) throw ValidationError("code needs at least one column");
    if (cp.s == 0) throw ValidationError("column height must be positive");
    if (cp.s >= F.p) throw ValidationError("column height must be below the characteristic");
    if (cp.d < 0) throw ValidationError("negative degree bound");
    if (u64(cp.d) >= u64(cp.n) * cp.s)
        throw ValidationError("degree bound must be below n*s");
    if (cp.alphas.size() != cp.n) throw ValidationError("column label count mismatch");
    if (cp.kind == CodeKind::Mult) {
        std::vector<u32> sorted = cp.alphas;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ValidationError("evaluation points must be distinct");
        for (u32 a : sorted)
            if (a >= F.p) throw ValidationError("evaluation point out of range");
    } else {
        if (cp.gamma == 0) throw ValidationError("folded code needs a folding element");
        if (F.order(cp.gamma) < u64(cp.n) * cp.s)
            throw ValidationError("folding element order below n*s");
    }
}

Poly random_message(const CodeParams& cp, Rng& rng) { return random_poly(cp.F, cp.d, rng); }

Codeword encode(const CodeParams& cp, const Poly& f) {
    const Field& F = cp.F;
    if (poly_deg(f) > cp.d) throw DegreeTooLarge();
    Codeword w(cp.n, std::vector<u32>(cp.s, 0));
    if (cp.kind == CodeKind::Mult) {
        // one shared tree: every derivative order is just another remainder push
        std::vector<Poly> leaves(cp.n);
        for (size_t j = 0; j < cp.n; ++j) leaves[j] = Poly{F.neg(cp.alphas[j]), 1};
        ProductTree tree = ProductTree::build(std::move(leaves), F);
        tree.ensure_inverses(F);
        std::vector<Poly> der = derivative_batch(f, int(cp.s) - 1, F);
        for (size_t k = 0; k < cp.s; ++k) {
            std::vector<Poly> rem = tree.remainders(der[k], F);
            for (size_t j = 0; j < cp.n; ++j) w[j][k] = poly_coeff(rem[j], 0);
        }
    } else {
        std::vector<u32> points(cp.n * cp.s);
        u32 g = 1;
        for (size_t j = 0; j < points.size(); ++j) {
            points[j] = g;
            g = F.mul(g, cp.gamma);
        }
        std::vector<u32> vals = multipoint_eval(f, points, F);
        for (size_t i = 0; i < cp.n; ++i)
            for (size_t k = 0; k < cp.s; ++k) w[i][k] = vals[i * cp.s + k];
    }
    return w;
}

size_t agreement(const Codeword& a, const Codeword& b) {
    if (a.size() != b.size()) throw DimensionMismatch();
    size_t count = 0;
    for (size_t j = 0; j < a.size(); ++j) {
        if (a[j].size() != b[j].size()) throw DimensionMismatch();
        if (a[j] == b[j]) ++count;
    }
    return count;
}

Codeword corrupt(const CodeParams& cp, const Codeword& w, size_t e, Rng& rng) {
    if (e > cp.n) throw ValidationError("more errors than columns");
    Codeword out = w;
    std::vector<size_t> cols = rng.sample_distinct(cp.n, e);
    for (size_t j : cols) {
        std::vector<u32> fresh(cp.s);
        do {
            for (u32& v : fresh) v = u32(rng.below(cp.F.p));
        } while (fresh == w[j]);
        out[j] = std::move(fresh);
    }
    return out;
}

}  // namespace mercode
