#include "mercode/poly.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace mercode {

void poly_trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_add(const Poly& a, const Poly& b, const Field& F) {
    Poly c(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = F.add(poly_coeff(a, i), poly_coeff(b, i));
    poly_trim(c);
    return c;
}

Poly poly_sub(const Poly& a, const Poly& b, const Field& F) {
    Poly c(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = F.sub(poly_coeff(a, i), poly_coeff(b, i));
    poly_trim(c);
    return c;
}

Poly poly_neg(const Poly& a, const Field& F) {
    Poly c(a);
    for (auto& x : c) x = F.neg(x);
    return c;
}

Poly poly_scale(const Poly& a, u32 c, const Field& F) {
    if (c == 0) return {};
    Poly r(a);
    for (auto& x : r) x = F.mul(x, c);
    return r;
}

Poly poly_shift_up(const Poly& a, size_t k) {
    if (a.empty()) return {};
    Poly r(a.size() + k, 0);
    std::copy(a.begin(), a.end(), r.begin() + k);
    return r;
}

Poly poly_shift_down(const Poly& a, size_t k) {
    if (a.size() <= k) return {};
    return Poly(a.begin() + k, a.end());
}

Poly poly_mul(const Poly& a, const Poly& b, const Field& F) {
    if (a.empty() || b.empty()) return {};
    Poly c = convolve(a, b, F);
    poly_trim(c);
    return c;
}

Poly poly_trunc(Poly a, size_t k) {
    if (a.size() > k) a.resize(k);
    poly_trim(a);
    return a;
}

Poly poly_mul_trunc(const Poly& a, const Poly& b, size_t k, const Field& F) {
    if (a.empty() || b.empty() || k == 0) return {};
    // Only the low k coefficients of each factor can contribute.
    Poly aa = a.size() > k ? Poly(a.begin(), a.begin() + k) : a;
    Poly bb = b.size() > k ? Poly(b.begin(), b.begin() + k) : b;
    poly_trim(aa);
    poly_trim(bb);
    return poly_trunc(poly_mul(aa, bb, F), k);
}

u32 poly_eval(const Poly& f, u32 x, const Field& F) {
    u32 r = 0;
    for (size_t i = f.size(); i-- > 0;) r = F.add(F.mul(r, x), f[i]);
    return r;
}

Poly poly_derivative(const Poly& f, const Field& F) {
    if (f.size() <= 1) return {};
    Poly d(f.size() - 1);
    u32 k = 1;
    for (size_t i = 1; i < f.size(); ++i) {
        d[i - 1] = F.mul(f[i], k);
        k = F.add(k, 1);
    }
    poly_trim(d);
    return d;
}

std::vector<Poly> derivative_batch(const Poly& f, int kmax, const Field& F) {
    std::vector<Poly> out;
    out.reserve(kmax + 1);
    out.push_back(f);
    for (int k = 1; k <= kmax; ++k) out.push_back(poly_derivative(out.back(), F));
    return out;
}

Poly poly_inv_series(const Poly& f, size_t k, const Field& F) {
    if (k == 0) return {};
    if (f.empty() || f[0] == 0) throw NotInvertible("power series has zero constant term");
    Poly g{F.inv(f[0])};
    size_t prec = 1;
    while (prec < k) {
        prec = std::min(2 * prec, k);
        // g <- g*(2 - f*g) mod x^prec
        Poly fg = poly_mul_trunc(f, g, prec, F);
        Poly two_minus(fg);
        for (auto& x : two_minus) x = F.neg(x);
        if (two_minus.empty()) two_minus.push_back(0);
        two_minus[0] = F.add(two_minus[0], 2);
        poly_trim(two_minus);
        g = poly_mul_trunc(g, two_minus, prec, F);
    }
    return g;
}

namespace {

Poly poly_rev(const Poly& a) { return Poly(a.rbegin(), a.rend()); }

PolyDivMod divmod_school(const Poly& a, const Poly& b, const Field& F) {
    Poly r(a);
    size_t db = b.size() - 1;
    u32 lead_inv = F.inv(b.back());
    Poly q(a.size() - b.size() + 1, 0);
    for (size_t i = a.size(); i-- > db;) {
        if (r[i] == 0) continue;
        u32 c = F.mul(r[i], lead_inv);
        q[i - db] = c;
        for (size_t j = 0; j < b.size(); ++j) r[i - db + j] = F.sub(r[i - db + j], F.mul(c, b[j]));
    }
    poly_trim(q);
    r.resize(db);
    poly_trim(r);
    return {q, r};
}

}  // namespace

PolyDivMod poly_divmod(const Poly& a, const Poly& b, const Field& F) {
    if (b.empty()) throw DivisionByZero();
    if (a.size() < b.size()) return {{}, a};
    size_t qlen = a.size() - b.size() + 1;
    if (qlen <= 32 || b.size() <= 32) return divmod_school(a, b, F);
    Poly rb = poly_rev(b);
    Poly inv = poly_inv_series(rb, qlen, F);
    return poly_divmod_pre(a, b, inv, F);
}

PolyDivMod poly_divmod_pre(const Poly& a, const Poly& b, const Poly& rev_b_inv, const Field& F) {
    if (b.empty()) throw DivisionByZero();
    if (a.size() < b.size()) return {{}, a};
    size_t qlen = a.size() - b.size() + 1;
    Poly ra = poly_rev(a);
    Poly qr = poly_mul_trunc(ra, rev_b_inv, qlen, F);
    qr.resize(qlen, 0);
    Poly q = poly_rev(qr);
    poly_trim(q);
    // r = a - q*b, degree < deg b, so only the low coefficients matter.
    size_t rlen = b.size() - 1;
    Poly qb = poly_mul_trunc(q, b, rlen, F);
    Poly r(rlen, 0);
    for (size_t i = 0; i < rlen; ++i) r[i] = F.sub(poly_coeff(a, i), poly_coeff(qb, i));
    poly_trim(r);
    return {q, r};
}

Poly poly_mod(const Poly& a, const Poly& b, const Field& F) { return poly_divmod(a, b, F).rem; }
Poly poly_div(const Poly& a, const Poly& b, const Field& F) { return poly_divmod(a, b, F).quot; }

Poly poly_gcd(Poly a, Poly b, const Field& F) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, F);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) a = poly_scale(a, F.inv(a.back()), F);
    return a;
}

Poly poly_powmod(const Poly& base, u64 e, const Poly& m, const Field& F) {
    Poly r{1};
    Poly b = poly_mod(base, m, F);
    while (e) {
        if (e & 1) r = poly_mod(poly_mul(r, b, F), m, F);
        b = poly_mod(poly_mul(b, b, F), m, F);
        e >>= 1;
    }
    return r;
}

const Factorials& factorials(const Field& F, size_t n) {
    thread_local std::map<u32, Factorials> cache;
    if (n >= F.p) throw CharacteristicTooSmall("factorial index reaches the characteristic");
    Factorials& t = cache[F.p];
    if (t.fact.size() <= n) {
        size_t old = t.fact.size();
        if (old == 0) {
            t.fact.assign(1, 1);
            old = 1;
        }
        t.fact.resize(n + 1);
        for (size_t i = old; i <= n; ++i) t.fact[i] = F.mul(t.fact[i - 1], F.reduce(i));
        t.inv_fact.resize(n + 1);
        t.inv_fact[n] = F.inv(t.fact[n]);
        for (size_t i = n; i-- > 0;) t.inv_fact[i] = F.mul(t.inv_fact[i + 1], F.reduce(i + 1));
    }
    return t;
}

u32 binomial(const Field& F, u64 n, u64 k) {
    if (k > n) return 0;
    const Factorials& t = factorials(F, size_t(n));
    return F.mul(t.fact[n], F.mul(t.inv_fact[k], t.inv_fact[n - k]));
}

u32 falling_factorial(const Field& F, u32 n, u64 j) {
    u32 r = 1;
    u32 x = n % F.p;
    for (u64 t = 0; t < j; ++t) {
        r = F.mul(r, x);
        x = F.sub(x, 1);
    }
    return r;
}

Poly taylor_shift(const Poly& f, u32 c, const Field& F) {
    if (f.size() <= 1 || c == 0) return f;
    size_t n = f.size() - 1;
    const Factorials& t = factorials(F, n);
    Poly a(n + 1);
    for (size_t i = 0; i <= n; ++i) a[i] = F.mul(f[n - i], t.fact[n - i]);  // reversed, scaled
    Poly b(n + 1);
    u32 cp = 1;
    for (size_t i = 0; i <= n; ++i) {
        b[i] = F.mul(cp, t.inv_fact[i]);
        cp = F.mul(cp, c);
    }
    Poly h = convolve(a, b, F);
    Poly g(n + 1);
    for (size_t k = 0; k <= n; ++k) g[k] = F.mul(h[n - k], t.inv_fact[k]);
    poly_trim(g);
    return g;
}

Poly vanishing_poly(const std::vector<u32>& points, int mult, const Field& F) {
    if (mult <= 0 || points.empty()) return {1};
    std::vector<Poly> leaves;
    leaves.reserve(points.size());
    for (u32 a : points) leaves.push_back(Poly{F.neg(a), 1});
    Poly e = ProductTree::build(std::move(leaves), F).root();
    // e^mult by binary powering
    Poly r{1};
    Poly b = e;
    int m = mult;
    while (m) {
        if (m & 1) r = poly_mul(r, b, F);
        m >>= 1;
        if (m) b = poly_mul(b, b, F);
    }
    return r;
}

Poly random_poly(const Field& F, i64 deg, Rng& rng) {
    if (deg < 0) return {};
    Poly f(size_t(deg) + 1);
    for (auto& x : f) x = u32(rng.below(F.p));
    poly_trim(f);
    return f;
}

ProductTree ProductTree::build(std::vector<Poly> leaves, const Field& F) {
    ProductTree t;
    t.levels.push_back(std::move(leaves));
    while (t.levels.back().size() > 1) {
        const auto& prev = t.levels.back();
        std::vector<Poly> next;
        next.reserve((prev.size() + 1) / 2);
        for (size_t i = 0; i < prev.size(); i += 2) {
            if (i + 1 < prev.size())
                next.push_back(poly_mul(prev[i], prev[i + 1], F));
            else
                next.push_back(prev[i]);
        }
        t.levels.push_back(std::move(next));
    }
    return t;
}

void ProductTree::ensure_inverses(const Field& F) {
    if (!inv_levels.empty()) return;
    inv_levels.resize(levels.size());
    // Top level never receives a precomputed-division push.
    for (size_t lv = 0; lv + 1 < levels.size(); ++lv) {
        inv_levels[lv].resize(levels[lv].size());
        for (size_t i = 0; i < levels[lv].size(); ++i) {
            if ((i ^ 1) >= levels[lv].size()) continue;  // promoted node, no division
            const Poly& node = levels[lv][i];
            const Poly& parent = levels[lv + 1][i / 2];
            size_t qlen = parent.size() - node.size();  // max quotient length seen in pushes
            if (qlen == 0) continue;
            Poly inv = poly_inv_series(poly_rev(node), qlen, F);
            inv.resize(qlen, 0);  // keep nominal length so the size check below stays valid
            inv_levels[lv][i] = std::move(inv);
        }
    }
}

std::vector<Poly> ProductTree::remainders(const Poly& f, const Field& F) const {
    std::vector<Poly> cur(1);
    cur[0] = f.size() >= root().size() ? poly_mod(f, root(), F) : f;
    for (size_t lv = levels.size() - 1; lv-- > 0;) {
        std::vector<Poly> next(levels[lv].size());
        for (size_t i = 0; i < levels[lv].size(); ++i) {
            const Poly& parent_rem = cur[i / 2];
            if ((i ^ 1) >= levels[lv].size()) {
                next[i] = parent_rem;
                continue;
            }
            const Poly& node = levels[lv][i];
            if (parent_rem.size() < node.size()) {
                next[i] = parent_rem;
            } else if (!inv_levels.empty() && !inv_levels[lv][i].empty() &&
                       parent_rem.size() - node.size() + 1 <= inv_levels[lv][i].size()) {
                next[i] = poly_divmod_pre(parent_rem, node, inv_levels[lv][i], F).rem;
            } else {
                next[i] = poly_mod(parent_rem, node, F);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

Poly ProductTree::combine(const std::vector<Poly>& c, const Field& F) const {
    if (c.size() != levels[0].size()) throw DimensionMismatch("combine size mismatch");
    std::vector<Poly> cur = c;
    for (size_t lv = 0; lv + 1 < levels.size(); ++lv) {
        std::vector<Poly> next;
        next.reserve(levels[lv + 1].size());
        for (size_t i = 0; i < cur.size(); i += 2) {
            if (i + 1 < cur.size()) {
                Poly v = poly_add(poly_mul(cur[i], levels[lv][i + 1], F),
                                  poly_mul(cur[i + 1], levels[lv][i], F), F);
                next.push_back(std::move(v));
            } else {
                next.push_back(cur[i]);
            }
        }
        cur = std::move(next);
    }
    return cur[0];
}

std::vector<u32> multipoint_eval(const Poly& f, const std::vector<u32>& points, const Field& F) {
    std::vector<u32> out(points.size());
    if (points.size() <= 32 || f.size() <= 64) {
        for (size_t i = 0; i < points.size(); ++i) out[i] = poly_eval(f, points[i], F);
        return out;
    }
    std::vector<Poly> leaves;
    leaves.reserve(points.size());
    for (u32 a : points) leaves.push_back(Poly{F.neg(a), 1});
    ProductTree t = ProductTree::build(std::move(leaves), F);
    std::vector<Poly> rem = t.remainders(f, F);
    for (size_t i = 0; i < points.size(); ++i) out[i] = rem[i].empty() ? 0 : rem[i][0];
    return out;
}

namespace {

void check_distinct(const std::vector<u32>& points) {
    std::unordered_set<u32> seen;
    for (u32 a : points)
        if (!seen.insert(a).second) throw DuplicatePoint();
}

}  // namespace

Poly interpolate(const std::vector<u32>& points, const std::vector<u32>& values, const Field& F) {
    if (points.size() != values.size()) throw DimensionMismatch("interpolation data mismatch");
    if (points.empty()) return {};
    check_distinct(points);
    if (points.size() <= 32) {
        // Newton's divided differences, quadratic but tiny.
        size_t n = points.size();
        std::vector<u32> dd(values);
        for (size_t k = 1; k < n; ++k)
            for (size_t i = n; i-- > k;)
                dd[i] = F.mul(F.sub(dd[i], dd[i - 1]),
                              F.inv(F.sub(points[i], points[i - k])));
        Poly f{dd[n - 1]};
        for (size_t i = n - 1; i-- > 0;) {
            // f <- f*(x - points[i]) + dd[i]
            f.insert(f.begin(), 0);
            u32 a = F.neg(points[i]);
            for (size_t j = 0; j + 1 < f.size(); ++j) f[j] = F.add(f[j], F.mul(f[j + 1], a));
            f[0] = F.add(f[0], dd[i]);
        }
        poly_trim(f);
        return f;
    }
    std::vector<Poly> leaves;
    leaves.reserve(points.size());
    for (u32 a : points) leaves.push_back(Poly{F.neg(a), 1});
    ProductTree t = ProductTree::build(std::move(leaves), F);
    Poly dm = poly_derivative(t.root(), F);
    std::vector<Poly> drem = t.remainders(dm, F);
    std::vector<Poly> c(points.size());
    for (size_t i = 0; i < points.size(); ++i) {
        u32 w = drem[i].empty() ? 0 : drem[i][0];
        c[i] = Poly{F.mul(values[i], F.inv(w))};
        poly_trim(c[i]);
    }
    return t.combine(c, F);
}

HermiteSystem::HermiteSystem(std::vector<u32> points, int s, const Field& F)
    : pts_(std::move(points)), s_(s) {
    if (s_ < 1) throw ValidationError("multiplicity must be positive");
    if (pts_.empty()) throw ValidationError("need at least one interpolation point");
    check_distinct(pts_);
    if (size_t(s_) >= F.p) throw CharacteristicTooSmall("multiplicity reaches the characteristic");
    const Factorials& ft = factorials(F, size_t(s_));

    size_t n = pts_.size();
    std::vector<Poly> leaves(n), lin(n);
    for (size_t j = 0; j < n; ++j) {
        lin[j] = Poly{F.neg(pts_[j]), 1};
        // (x - a)^s by the binomial theorem
        Poly leaf(size_t(s_) + 1);
        u32 na = F.neg(pts_[j]);
        u32 pw = 1;
        for (int k = s_; k >= 0; --k) {
            // coefficient of x^k is C(s,k) * (-a)^(s-k)
            u32 c = F.mul(ft.fact[s_], F.mul(ft.inv_fact[k], ft.inv_fact[s_ - k]));
            leaf[k] = F.mul(c, pw);
            pw = F.mul(pw, na);
        }
        leaves[j] = std::move(leaf);
    }
    tree_ = ProductTree::build(std::move(leaves), F);
    tree_.ensure_inverses(F);
    ProductTree t1 = ProductTree::build(std::move(lin), F);

    // Push W = prod_{i outside node} (x - a_i), reduced mod the node's
    // multiplicity-s product, down to the leaves.
    std::vector<Poly> cur(1, Poly{1});
    for (size_t lv = tree_.levels.size() - 1; lv-- > 0;) {
        std::vector<Poly> next(tree_.levels[lv].size());
        for (size_t i = 0; i < next.size(); ++i) {
            size_t sib = i ^ 1;
            if (sib >= next.size()) {
                next[i] = cur[i / 2];
                continue;
            }
            Poly w = poly_mul(cur[i / 2], t1.levels[lv][sib], F);
            next[i] = poly_mod(w, tree_.levels[lv][i], F);
        }
        cur = std::move(next);
    }

    inv_factor_.resize(n);
    for (size_t j = 0; j < n; ++j) {
        Poly w = poly_trunc(taylor_shift(cur[j], pts_[j], F), size_t(s_));
        // w(0) = prod_{i != j}(a_j - a_i) != 0 for distinct points
        Poly ws{1};
        Poly b = w;
        int e = s_;
        while (e) {
            if (e & 1) ws = poly_mul_trunc(ws, b, size_t(s_), F);
            e >>= 1;
            if (e) b = poly_mul_trunc(b, b, size_t(s_), F);
        }
        inv_factor_[j] = poly_inv_series(ws, size_t(s_), F);
    }
}

Poly HermiteSystem::interpolate(const std::vector<std::vector<u32>>& values,
                                const Field& F) const {
    size_t n = pts_.size();
    if (values.size() != n) throw DimensionMismatch("hermite data mismatch");
    const Factorials& ft = factorials(F, size_t(s_));
    std::vector<Poly> residues(n);
    for (size_t j = 0; j < n; ++j) {
        if (values[j].size() < size_t(s_)) throw DimensionMismatch("hermite data mismatch");
        Poly target(size_t(s_), 0);
        for (int k = 0; k < s_; ++k) target[k] = F.mul(values[j][k], ft.inv_fact[k]);
        poly_trim(target);
        Poly c = poly_mul_trunc(target, inv_factor_[j], size_t(s_), F);
        // back to global coordinates: c(x) -> c(x - a_j)
        residues[j] = taylor_shift(c, F.neg(pts_[j]), F);
    }
    return tree_.combine(residues, F);
}

std::vector<Poly> HermiteSystem::taylor_remainders(const Poly& a, const Field& F) const {
    std::vector<Poly> rem = tree_.remainders(a, F);
    for (size_t j = 0; j < pts_.size(); ++j)
        rem[j] = poly_trunc(taylor_shift(rem[j], pts_[j], F), size_t(s_));
    return rem;
}

Poly hermite_interpolate(const std::vector<u32>& points,
                         const std::vector<std::vector<u32>>& values, int s, const Field& F) {
    HermiteSystem sys(points, s, F);
    return sys.interpolate(values, F);
}

}  // namespace mercode
