#include "mercode/decode.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>

#include "mercode/errors.hpp"
#include "mercode/funcsolve.hpp"
#include "mercode/linalg.hpp"
#include "mercode/odesolve.hpp"
#include "mercode/parallel.hpp"

namespace mercode {

using Clock = std::chrono::steady_clock;

static double ms_between(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
}

// ceil with a small downward nudge so quantities that are integers up to
// floating noise (2/eps for eps = 0.5, 1/eps for eps = 0.1, ..) land exactly
static i64 ceil_snap(double x) { return i64(std::ceil(x - 1e-9)); }

CapacityChoice choose_capacity_params(double eps) {
    if (!(eps > 0)) throw ValidationError("eps must be positive");
    const double t = 2.0 / eps;
    CapacityChoice c;
    c.m = int(std::max<i64>(1, ceil_snap(t)));
    c.s_min = size_t(std::max<i64>(c.m + 1, ceil_snap((1.0 + t) * (1.0 + t))));
    return c;
}

static void check_shape(const CodeParams& cp, const Codeword& w) {
    if (w.size() != cp.n) throw DimensionMismatch("column count");
    for (const auto& col : w)
        if (col.size() != cp.s) throw DimensionMismatch("column height");
}

// columns of the codeword of f restricted to the given coordinate subset
static std::vector<std::vector<u32>> subset_columns(const CodeParams& cp, const Poly& f,
                                                    const std::vector<size_t>& idx,
                                                    const HermiteSystem* hs) {
    const Field& F = cp.F;
    std::vector<std::vector<u32>> cols(idx.size(), std::vector<u32>(cp.s));
    if (cp.kind == CodeKind::Mult) {
        const Factorials& fct = factorials(F, cp.s);
        std::vector<Poly> tay = hs->taylor_remainders(f, F);
        for (size_t u = 0; u < idx.size(); ++u)
            for (size_t k = 0; k < cp.s; ++k)
                cols[u][k] = F.mul(poly_coeff(tay[u], k), fct.fact[k]);
    } else {
        std::vector<u32> pts;
        pts.reserve(idx.size() * cp.s);
        for (size_t u = 0; u < idx.size(); ++u) {
            u32 g = F.pow(cp.gamma, u64(idx[u]) * cp.s);
            for (size_t k = 0; k < cp.s; ++k) {
                pts.push_back(g);
                g = F.mul(g, cp.gamma);
            }
        }
        std::vector<u32> vals = multipoint_eval(f, pts, F);
        for (size_t u = 0; u < idx.size(); ++u)
            for (size_t k = 0; k < cp.s; ++k) cols[u][k] = vals[u * cp.s + k];
    }
    return cols;
}

std::vector<Poly> prune_candidates(const CodeParams& cp, const AffineSpace& sp, const Codeword& w,
                                   size_t min_agree, u64 seed, double constant, double fail_prob) {
    const Field& F = cp.F;
    check_shape(cp, w);
    if (!(constant > 0) || !(fail_prob > 0) || fail_prob >= 1)
        throw ValidationError("bad pruning parameters");
    if (sp.none || min_agree > cp.n) return {};

    AffineSpace r = affine_reduce(sp, F);
    const size_t dim = r.directions.size();
    if (dim == 0) return {r.offset};
    if (min_agree == 0) {
        // every member qualifies; exact enumeration is the only option left
        // (throws when the space is too large)
        return affine_enumerate(r, F);
    }

    // one coordinate more than the number of free directions, so a trial
    // landing inside a member's agreement set pins it down uniquely in the
    // generic case
    const size_t t = dim + 1;

    // probability that one trial (t independent uniform draws) lands entirely
    // in the agreement set of a member matching min_agree columns
    const double q = std::pow(double(min_agree) / double(cp.n), double(t));
    double kd = std::ceil(constant * std::log(double(dim + 1) / fail_prob) / q);
    size_t trials = size_t(std::max(1.0, kd));
    trials = std::min(trials, size_t(1) << 20);  // bound adversarial parameters

    std::vector<std::vector<size_t>> coords(trials, std::vector<size_t>(t));
    std::vector<size_t> uni;
    for (size_t tr = 0; tr < trials; ++tr) {
        Rng rng(mix_seed(seed, u64(tr)));
        for (size_t i = 0; i < t; ++i) coords[tr][i] = size_t(rng.below(cp.n));
        uni.insert(uni.end(), coords[tr].begin(), coords[tr].end());
    }
    std::sort(uni.begin(), uni.end());
    uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
    std::vector<size_t> pos(cp.n, size_t(-1));
    for (size_t u = 0; u < uni.size(); ++u) pos[uni[u]] = u;

    // evaluate the member family once over the union of all sampled
    // coordinates; each trial then only reads slices
    std::unique_ptr<HermiteSystem> hs;
    if (cp.kind == CodeKind::Mult) {
        std::vector<u32> upts(uni.size());
        for (size_t u = 0; u < uni.size(); ++u) upts[u] = cp.alphas[uni[u]];
        hs = std::make_unique<HermiteSystem>(std::move(upts), int(cp.s), F);
    }
    std::vector<std::vector<u32>> off_cols = subset_columns(cp, r.offset, uni, hs.get());
    std::vector<std::vector<std::vector<u32>>> dir_cols(dim);
    for (size_t j = 0; j < dim; ++j)
        dir_cols[j] = subset_columns(cp, r.directions[j], uni, hs.get());

    // trials are independent; the merge below makes the result order-free
    std::vector<std::vector<u32>> hits(trials);
    std::vector<char> hit(trials, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_cap())
#endif
    for (size_t tr = 0; tr < trials; ++tr) {
        Mat a(t * cp.s, std::vector<u32>(dim));
        std::vector<u32> b(t * cp.s);
        for (size_t ti = 0; ti < t; ++ti) {
            const size_t c = coords[tr][ti];
            const size_t u = pos[c];
            for (size_t k = 0; k < cp.s; ++k) {
                const size_t row = ti * cp.s + k;
                b[row] = F.sub(w[c][k], off_cols[u][k]);
                for (size_t j = 0; j < dim; ++j) a[row][j] = dir_cols[j][u][k];
            }
        }
        LinSolve ls = solve_linear(std::move(a), std::move(b), dim, F);
        if (!ls.consistent || !ls.unique) continue;
        hits[tr] = std::move(ls.solution);
        hit[tr] = 1;
    }
    std::vector<std::vector<u32>> sols;
    for (size_t tr = 0; tr < trials; ++tr)
        if (hit[tr]) sols.push_back(std::move(hits[tr]));
    std::sort(sols.begin(), sols.end());
    sols.erase(std::unique(sols.begin(), sols.end()), sols.end());

    std::vector<Poly> out;
    for (const std::vector<u32>& sol : sols) {
        Poly f = r.offset;
        for (size_t j = 0; j < dim; ++j)
            f = poly_add(f, poly_scale(r.directions[j], sol[j], F), F);
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

static int capacity_order(const CodeParams& cp, double eps) {
    validate_code(cp);
    CapacityChoice c = choose_capacity_params(eps);
    if (cp.s < c.s_min)
        throw FoldingTooSmall("column height " + std::to_string(cp.s) + " below the required " +
                              std::to_string(c.s_min) + " for this eps");
    return c.m;
}

CapacityDecoder::CapacityDecoder(const CodeParams& cp, double eps)
    : cp_(cp), m_(capacity_order(cp, eps)), interp_(cp_, m_) {}

i64 CapacityDecoder::threshold(i64 degree_bound) const {
    const i64 sm = i64(cp_.s) - m_;
    return (degree_bound + cp_.d + sm - 1) / sm + 1;
}

std::vector<Poly> CapacityDecoder::decode(const Codeword& w, const DecodeOptions& opts,
                                          DecodeTimes* times) const {
    const Field& F = cp_.F;
    const auto t0 = Clock::now();
    CapacityInterpolator::Result res = interp_.run(w);
    const auto t1 = Clock::now();

    AffineSpace sp = cp_.kind == CodeKind::Mult
                         ? solve_derivative_equation(res.op, cp_.d, F)
                         : solve_folded_equation(res.op, cp_.gamma, cp_.d, F);
    const auto t2 = Clock::now();

    const i64 T = threshold(res.op.x_degree_bound);
    std::vector<Poly> cands = prune_candidates(cp_, sp, w, size_t(T), opts.seed,
                                               opts.prune_constant, opts.prune_fail_prob);
    std::vector<Poly> out;
    for (Poly& f : cands) {
        if (poly_deg(f) > cp_.d) continue;
        if (i64(interp_.agreement(f, w)) >= T) out.push_back(std::move(f));
    }
    const auto t3 = Clock::now();

    if (times) {
        times->interpolate_ms = ms_between(t0, t1);
        times->solve_ms = ms_between(t1, t2);
        times->prune_ms = ms_between(t2, t3);
        times->total_ms = ms_between(t0, t3);
    }
    return out;
}

static int johnson_order(const CodeParams& cp, double eps) {
    validate_code(cp);
    if (!(eps > 0)) throw ValidationError("eps must be positive");
    if (cp.d < 1) throw ValidationError("degree bound must be positive");
    return int(std::max<i64>(1, ceil_snap(1.0 / eps)));
}

// least u whose weighted-degree budget u(u+1)d/2 covers the sigma of the
// vanishing conditions, r(r+1)ns/2
static int johnson_ydeg(const CodeParams& cp, int r) {
    const i64 target = i64(r) * (r + 1) * i64(cp.n) * i64(cp.s);
    i64 u = 1;
    while (u * (u + 1) * cp.d < target) ++u;
    return int(u);
}

JohnsonDecoder::JohnsonDecoder(const CodeParams& cp, double eps)
    : cp_(cp), r_(johnson_order(cp, eps)), u_(johnson_ydeg(cp_, r_)), interp_(cp_, r_, u_) {}

std::vector<Poly> JohnsonDecoder::decode(const Codeword& w, const DecodeOptions& opts,
                                         DecodeTimes* times) const {
    const auto t0 = Clock::now();
    JohnsonInterpolator::Result res = interp_.run(w);
    const auto t1 = Clock::now();

    std::vector<Poly> roots = bivariate_roots(res.q, cp_.d, cp_.F, opts.seed);
    const auto t2 = Clock::now();

    std::vector<Poly> out;
    for (Poly& f : roots)
        if (i64(interp_.agreement(f, w)) * i64(cp_.s) * r_ > res.weighted_degree)
            out.push_back(std::move(f));
    const auto t3 = Clock::now();

    if (times) {
        times->interpolate_ms = ms_between(t0, t1);
        times->solve_ms = ms_between(t1, t2);
        times->prune_ms = ms_between(t2, t3);
        times->total_ms = ms_between(t0, t3);
    }
    return out;
}

}  // namespace mercode
