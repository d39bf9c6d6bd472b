#include "mercode/minbasis.hpp"

#include <algorithm>

namespace mercode {

std::vector<Poly> polymat_mul(const std::vector<Poly>& A, size_t ra, size_t m,
                              const std::vector<Poly>& B, size_t cb, const Field& F) {
    if (A.size() != ra * m || B.size() != m * cb) throw DimensionMismatch("matrix shape");
    i64 da = kZeroPolyDeg, db = kZeroPolyDeg;
    for (const Poly& f : A) da = std::max(da, poly_deg(f));
    for (const Poly& f : B) db = std::max(db, poly_deg(f));
    std::vector<Poly> C(ra * cb);
    if (da == kZeroPolyDeg || db == kZeroPolyDeg) return C;
    size_t la = size_t(da) + 1, lb = size_t(db) + 1, lc = la + lb - 1;

    if (la <= 40 || lb <= 40 || la * lb <= 4096) {
        std::vector<u64> acc(lc);
        for (size_t i = 0; i < ra; ++i)
            for (size_t j = 0; j < cb; ++j) {
                std::fill(acc.begin(), acc.end(), 0);
                for (size_t l = 0; l < m; ++l) {
                    const Poly& a = A[i * m + l];
                    const Poly& b = B[l * cb + j];
                    for (size_t x = 0; x < a.size(); ++x) {
                        if (a[x] == 0) continue;
                        for (size_t y = 0; y < b.size(); ++y) acc[x + y] += F.mul(a[x], b[y]);
                    }
                }
                Poly& out = C[i * cb + j];
                out.resize(lc);
                for (size_t x = 0; x < lc; ++x) out[x] = F.reduce(acc[x]);
                poly_trim(out);
            }
        return C;
    }

    ConvPlan plan = plan_convolution(la, lb, F);
    size_t ts = plan.transform_size;
    int np = plan.direct ? 1 : plan.num_primes;
    // per_prime[q][i*cb+j] = coefficients of entry (i,j) mod prime q
    std::vector<std::vector<std::vector<u32>>> per_prime(np);
    for (int q = 0; q < np; ++q) {
        const Field& Q = plan.direct ? F : crt_field(q);
        std::vector<std::vector<u32>> fa(ra * m), fb(m * cb);
        auto load = [&](const Poly& src) {
            std::vector<u32> v(ts, 0);
            if (plan.direct) {
                std::copy(src.begin(), src.end(), v.begin());
            } else {
                for (size_t x = 0; x < src.size(); ++x) v[x] = Q.reduce(src[x]);
            }
            ntt(v, false, Q);
            return v;
        };
        for (size_t e = 0; e < ra * m; ++e) fa[e] = load(A[e]);
        for (size_t e = 0; e < m * cb; ++e) fb[e] = load(B[e]);
        auto& out = per_prime[q];
        out.resize(ra * cb);
        std::vector<u64> acc(ts);
        for (size_t i = 0; i < ra; ++i)
            for (size_t j = 0; j < cb; ++j) {
                std::fill(acc.begin(), acc.end(), 0);
                for (size_t l = 0; l < m; ++l) {
                    const u32* a = fa[i * m + l].data();
                    const u32* b = fb[l * cb + j].data();
                    for (size_t x = 0; x < ts; ++x) acc[x] += Q.mul(a[x], b[x]);
                }
                std::vector<u32> v(ts);
                for (size_t x = 0; x < ts; ++x) v[x] = Q.reduce(acc[x]);
                ntt(v, true, Q);
                v.resize(lc);
                out[i * cb + j] = std::move(v);
            }
    }
    for (size_t e = 0; e < ra * cb; ++e) {
        Poly& out = C[e];
        if (plan.direct) {
            out = std::move(per_prime[0][e]);
        } else {
            out.resize(lc);
            u32 r[3] = {0, 0, 0};
            for (size_t x = 0; x < lc; ++x) {
                for (int q = 0; q < np; ++q) r[q] = per_prime[q][e][x];
                out[x] = crt_reconstruct(r, np, F);
            }
        }
        poly_trim(out);
    }
    return C;
}

CongruenceEngine::CongruenceEngine(size_t k, std::vector<u32> points,
                                   std::vector<std::vector<int>> mults, const Field& F,
                                   i64 max_input_deg)
    : k_(k), pts_(std::move(points)), mults_(std::move(mults)), F_(F) {
    if (k_ == 0 || pts_.empty() || mults_.empty()) throw ValidationError("empty engine setup");
    for (const auto& m : mults_)
        if (m.size() != pts_.size()) throw DimensionMismatch("multiplicity table shape");

    size_t n = pts_.size();
    num_levels_ = 1;
    while ((size_t(1) << (num_levels_ - 1)) < n) ++num_levels_;

    size_t c = mults_.size();
    trees_.resize(c);
    range_sigma_.assign(num_levels_, {});
    range_sigma_[0].resize(n, 0);
    for (size_t t = 0; t < c; ++t) {
        trees_[t].resize(num_levels_);
        trees_[t][0].resize(n);
        for (size_t j = 0; j < n; ++j) {
            int e = mults_[t][j];
            if (e < 0) throw ValidationError("negative multiplicity");
            trees_[t][0][j].modulus = e == 0 ? Poly{1} : vanishing_poly({pts_[j]}, e, F_);
            if (t == 0) range_sigma_[0][j] = 0;
            range_sigma_[0][j] += e;
        }
        for (size_t lv = 1; lv < num_levels_; ++lv) {
            size_t prev = trees_[t][lv - 1].size();
            size_t cnt = (prev + 1) / 2;
            trees_[t][lv].resize(cnt);
            for (size_t i = 0; i < cnt; ++i) {
                if (2 * i + 1 < prev)
                    trees_[t][lv][i].modulus = poly_mul(trees_[t][lv - 1][2 * i].modulus,
                                                        trees_[t][lv - 1][2 * i + 1].modulus, F_);
                else
                    trees_[t][lv][i].modulus = trees_[t][lv - 1][2 * i].modulus;
            }
        }
    }
    for (size_t lv = 1; lv < num_levels_; ++lv) {
        size_t cnt = trees_[0][lv].size();
        range_sigma_[lv].assign(cnt, 0);
        for (size_t i = 0; i < cnt; ++i) {
            range_sigma_[lv][i] = range_sigma_[lv - 1][2 * i];
            if (2 * i + 1 < range_sigma_[lv - 1].size())
                range_sigma_[lv][i] += range_sigma_[lv - 1][2 * i + 1];
        }
    }
    sigma_ = range_sigma_[num_levels_ - 1][0];

    // Newton inverses: a node's reductions see quotients bounded by its
    // sibling's condition total (residual degrees), so size them accordingly.
    for (size_t t = 0; t < c; ++t) {
        for (size_t lv = 0; lv < num_levels_; ++lv) {
            for (size_t i = 0; i < trees_[t][lv].size(); ++i) {
                Node& nd = trees_[t][lv][i];
                i64 prec = 0;
                if (lv + 1 == num_levels_) {
                    if (max_input_deg > 0)
                        prec = max_input_deg + 1 - i64(nd.modulus.size()) + 1;
                } else {
                    size_t sib = i ^ 1;
                    if (sib < trees_[t][lv].size()) prec = range_sigma_[lv][sib] + 1;
                }
                if (prec > 0 && nd.modulus.size() > 1) {
                    Poly inv = poly_inv_series(Poly(nd.modulus.rbegin(), nd.modulus.rend()),
                                               size_t(prec), F_);
                    inv.resize(size_t(prec), 0);
                    nd.inv = std::move(inv);
                }
            }
        }
    }
}

i64 CongruenceEngine::range_total(size_t level, size_t idx) const {
    return range_sigma_[level][idx];
}

Poly CongruenceEngine::reduce_mod(size_t col, size_t level, size_t idx, const Poly& f) const {
    const Node& nd = trees_[col][level][idx];
    if (f.size() < nd.modulus.size()) return f;
    size_t qlen = f.size() - nd.modulus.size() + 1;
    if (!nd.inv.empty() && qlen <= nd.inv.size())
        return poly_divmod_pre(f, nd.modulus, nd.inv, F_).rem;
    return poly_mod(f, nd.modulus, F_);
}

void CongruenceEngine::leaf(size_t point_idx, std::vector<std::vector<Poly>>& fcols,
                            std::vector<i64>& sdeg, std::vector<Poly>& basis_out) const {
    size_t c = mults_.size();
    u32 gamma = pts_[point_idx];
    // Shift to local coordinates so conditions become low-order coefficients.
    for (size_t t = 0; t < c; ++t) {
        size_t e = size_t(mults_[t][point_idx]);
        for (size_t i = 0; i < k_; ++i)
            fcols[t][i] = poly_trunc(taylor_shift(fcols[t][i], gamma, F_), e);
    }
    std::vector<Poly> P(k_ * k_);
    for (size_t i = 0; i < k_; ++i) P[i * k_ + i] = Poly{1};

    int maxe = 0;
    for (size_t t = 0; t < c; ++t) maxe = std::max(maxe, mults_[t][point_idx]);
    for (int ord = 0; ord < maxe; ++ord) {
        for (size_t t = 0; t < c; ++t) {
            if (mults_[t][point_idx] <= ord) continue;
            // pivot: minimal shifted degree among rows with nonzero value
            size_t piv = k_;
            for (size_t i = 0; i < k_; ++i) {
                if (poly_coeff(fcols[t][i], size_t(ord)) == 0) continue;
                if (piv == k_ || sdeg[i] < sdeg[piv]) piv = i;
            }
            if (piv == k_) continue;  // condition already satisfied
            u32 vinv = F_.inv(poly_coeff(fcols[t][piv], size_t(ord)));
            for (size_t i = 0; i < k_; ++i) {
                if (i == piv) continue;
                u32 v = poly_coeff(fcols[t][i], size_t(ord));
                if (v == 0) continue;
                u32 lam = F_.mul(v, vinv);
                for (size_t j = 0; j < k_; ++j)
                    P[i * k_ + j] =
                        poly_sub(P[i * k_ + j], poly_scale(P[piv * k_ + j], lam, F_), F_);
                for (size_t u = 0; u < c; ++u)
                    fcols[u][i] = poly_sub(fcols[u][i], poly_scale(fcols[u][piv], lam, F_), F_);
            }
            for (size_t j = 0; j < k_; ++j) P[piv * k_ + j] = poly_shift_up(P[piv * k_ + j], 1);
            for (size_t u = 0; u < c; ++u)
                fcols[u][piv] = poly_trunc(poly_shift_up(fcols[u][piv], 1),
                                           size_t(mults_[u][point_idx]));
            sdeg[piv] += 1;
        }
    }
    if (gamma != 0) {
        u32 ng = F_.neg(gamma);
        for (Poly& f : P) f = taylor_shift(f, ng, F_);
    }
    basis_out = std::move(P);
}

void CongruenceEngine::solve_rec(size_t level, size_t idx, std::vector<std::vector<Poly>>& fcols,
                                 std::vector<i64>& sdeg, std::vector<Poly>& basis_out) const {
    size_t c = mults_.size();
    if (range_total(level, idx) == 0) {
        basis_out.assign(k_ * k_, Poly{});
        for (size_t i = 0; i < k_; ++i) basis_out[i * k_ + i] = Poly{1};
        return;
    }
    if (level == 0) {
        leaf(idx, fcols, sdeg, basis_out);
        return;
    }
    size_t lc = 2 * idx, rc = 2 * idx + 1;
    if (rc >= trees_[0][level - 1].size()) {
        solve_rec(level - 1, lc, fcols, sdeg, basis_out);
        return;
    }
    std::vector<std::vector<Poly>> left(c, std::vector<Poly>(k_));
    for (size_t t = 0; t < c; ++t)
        for (size_t i = 0; i < k_; ++i) left[t][i] = reduce_mod(t, level - 1, lc, fcols[t][i]);
    std::vector<Poly> P1;
    solve_rec(level - 1, lc, left, sdeg, P1);

    // Residual for the right half: (P1 * (F mod M_R)) mod M_R.
    std::vector<Poly> B(k_ * c);
    for (size_t t = 0; t < c; ++t)
        for (size_t i = 0; i < k_; ++i) B[i * c + t] = reduce_mod(t, level - 1, rc, fcols[t][i]);
    std::vector<Poly> prod = polymat_mul(P1, k_, k_, B, c, F_);
    std::vector<std::vector<Poly>> right(c, std::vector<Poly>(k_));
    for (size_t t = 0; t < c; ++t)
        for (size_t i = 0; i < k_; ++i)
            right[t][i] = reduce_mod(t, level - 1, rc, prod[i * c + t]);
    std::vector<Poly> P2;
    solve_rec(level - 1, rc, right, sdeg, P2);
    basis_out = polymat_mul(P2, k_, k_, P1, k_, F_);
}

MinimalBasis CongruenceEngine::solve(const std::vector<std::vector<Poly>>& fcols,
                                     const std::vector<i64>& shift) const {
    size_t c = mults_.size();
    if (fcols.size() != c) throw DimensionMismatch("column count");
    for (const auto& col : fcols)
        if (col.size() != k_) throw DimensionMismatch("column height");
    if (shift.size() != k_) throw DimensionMismatch("shift length");

    size_t top = num_levels_ - 1;
    std::vector<std::vector<Poly>> work(c, std::vector<Poly>(k_));
    for (size_t t = 0; t < c; ++t)
        for (size_t i = 0; i < k_; ++i) work[t][i] = reduce_mod(t, top, 0, fcols[t][i]);

    MinimalBasis mb;
    mb.k = k_;
    mb.sdeg = shift;
    solve_rec(top, 0, work, mb.sdeg, mb.rows);
    return mb;
}

}  // namespace mercode
