#include "mercode/ntt.hpp"

#include <map>
#include <utility>

#include "mercode/parallel.hpp"

namespace mercode {

namespace {

// Shoup modular multiplication by a constant w with precomputed
// wm = floor(w * 2^64 / p). Result canonical in [0, p).
inline u32 shoup_mul(u32 x, u32 w, u64 wm, u32 p) {
    u64 q = u64((u128(x) * wm) >> 64);
    u64 r = u64(x) * w - q * p;  // in [0, 2p)
    if (r >= p) r -= p;
    return u32(r);
}

// Twiddle tables for one (modulus, size): rt[k+j] = w_{2k}^j for k a power of
// two and 0 <= j < k, plus the inverse roots and Shoup magics for both.
struct Tables {
    std::vector<u32> rt, irt;
    std::vector<u64> rtm, irtm;
    std::vector<u32> nrev;  // bit-reversal permutation
    u32 ninv;
    u64 ninv_m;
};

u64 shoup_magic(u32 w, u32 p) { return u64((u128(w) << 64) / p); }

const Tables& get_tables(const Field& F, size_t n) {
    thread_local std::map<std::pair<u32, size_t>, Tables> cache;
    auto key = std::make_pair(F.p, n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    int logn = 0;
    while ((size_t(1) << logn) < n) ++logn;
    if ((size_t(1) << logn) != n || logn > F.two_adicity)
        throw ValidationError("transform size unsupported by modulus");

    Tables t;
    t.rt.assign(n, 1);
    t.irt.assign(n, 1);
    for (size_t k = 1; k < n; k <<= 1) {
        int lg2k = 1;
        while ((size_t(1) << lg2k) < 2 * k) ++lg2k;
        u32 w = F.pow(F.two_adic_root, u64(1) << (F.two_adicity - lg2k));
        u32 wi = F.inv(w);
        for (size_t j = 1; j < k; ++j) {
            t.rt[k + j] = F.mul(t.rt[k + j - 1], w);
            t.irt[k + j] = F.mul(t.irt[k + j - 1], wi);
        }
    }
    t.rtm.resize(n);
    t.irtm.resize(n);
    for (size_t i = 0; i < n; ++i) {
        t.rtm[i] = shoup_magic(t.rt[i], F.p);
        t.irtm[i] = shoup_magic(t.irt[i], F.p);
    }
    t.nrev.resize(n);
    for (size_t i = 0; i < n; ++i) t.nrev[i] = u32((t.nrev[i / 2] | ((i & 1) << logn)) / 2);
    t.ninv = F.inv(F.reduce(n));
    t.ninv_m = shoup_magic(t.ninv, F.p);
    return cache.emplace(key, std::move(t)).first->second;
}

}  // namespace

void ntt_serial(std::vector<u32>& a, bool inverse, const Field& F) {
    size_t n = a.size();
    if (n <= 1) return;
    const Tables& t = get_tables(F, n);
    const u32 p = F.p;
    for (size_t i = 0; i < n; ++i)
        if (i < t.nrev[i]) std::swap(a[i], a[t.nrev[i]]);
    const u32* rt = inverse ? t.irt.data() : t.rt.data();
    const u64* rtm = inverse ? t.irtm.data() : t.rtm.data();
    for (size_t k = 1; k < n; k <<= 1) {
        for (size_t i = 0; i < n; i += 2 * k) {
            for (size_t j = 0; j < k; ++j) {
                u32 z = shoup_mul(a[i + j + k], rt[k + j], rtm[k + j], p);
                u32 u = a[i + j];
                u32 s = u + z;
                a[i + j] = s >= p ? s - p : s;
                a[i + j + k] = u >= z ? u - z : u + p - z;
            }
        }
    }
    if (inverse) {
        for (size_t i = 0; i < n; ++i) a[i] = shoup_mul(a[i], t.ninv, t.ninv_m, p);
    }
}

void ntt_omp(std::vector<u32>& a, bool inverse, const Field& F) {
    size_t n = a.size();
    if (n <= 1) return;
    const Tables& t = get_tables(F, n);
    const u32 p = F.p;
    const u32* rt = inverse ? t.irt.data() : t.rt.data();
    const u64* rtm = inverse ? t.irtm.data() : t.rtm.data();
    u32* d = a.data();
    const u32* rev = t.nrev.data();
#ifdef _OPENMP
#pragma omp parallel num_threads(thread_cap())
#endif
    {
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (long long i = 0; i < (long long)n; ++i) {
            u32 r = rev[i];
            if ((u32)i < r) std::swap(d[i], d[r]);
        }
        for (size_t k = 1; k < n; k <<= 1) {
            long long nb = (long long)(n / (2 * k));
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
            for (long long b = 0; b < nb; ++b) {
                size_t i = size_t(b) * 2 * k;
                for (size_t j = 0; j < k; ++j) {
                    u32 z = shoup_mul(d[i + j + k], rt[k + j], rtm[k + j], p);
                    u32 u = d[i + j];
                    u32 s = u + z;
                    d[i + j] = s >= p ? s - p : s;
                    d[i + j + k] = u >= z ? u - z : u + p - z;
                }
            }
        }
        if (inverse) {
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
            for (long long i = 0; i < (long long)n; ++i)
                d[i] = shoup_mul(d[i], t.ninv, t.ninv_m, p);
        }
    }
}

void ntt(std::vector<u32>& a, bool inverse, const Field& F) {
    if (a.size() >= (size_t(1) << 15) && thread_cap() > 1)
        ntt_omp(a, inverse, F);
    else
        ntt_serial(a, inverse, F);
}

// Ordered by descending two-adicity so prefix choices keep the largest
// reachable transform size.
const CrtPrime kCrtPrimes[3] = {{469762049u, 26}, {998244353u, 23}, {1004535809u, 21}};

const Field& crt_field(int i) {
    static const Field f0(kCrtPrimes[0].p), f1(kCrtPrimes[1].p), f2(kCrtPrimes[2].p);
    switch (i) {
        case 0: return f0;
        case 1: return f1;
        default: return f2;
    }
}

ConvPlan plan_convolution(size_t len_a, size_t len_b, const Field& F) {
    size_t res = len_a + len_b - 1;
    size_t tsize = 1;
    int logt = 0;
    while (tsize < res) {
        tsize <<= 1;
        ++logt;
    }
    if (logt <= F.two_adicity) return {true, 0, tsize};
    // Coefficient bound for exact reconstruction over the integers.
    u128 bound = u128(std::min(len_a, len_b)) * (F.p - 1) * (F.p - 1) + 1;
    u128 prod = 1;
    for (int np = 1; np <= 3; ++np) {
        if (logt > kCrtPrimes[np - 1].two_adicity) break;  // adicity shrinks along the list
        prod *= kCrtPrimes[np - 1].p;
        if (prod >= bound) return {false, np, tsize};
    }
    throw ValidationError("convolution too large for the available NTT moduli");
}

u32 crt_reconstruct(const u32* r, int np, const Field& F) {
    static const u64 q0 = kCrtPrimes[0].p, q1 = kCrtPrimes[1].p, q2 = kCrtPrimes[2].p;
    if (np == 1) return F.reduce(r[0]);
    const Field& F1 = crt_field(1);
    const Field& F2 = crt_field(2);
    static const u32 inv_q0_mod_q1 = F1.inv(F1.reduce(q0));
    static const u32 inv_q0q1_mod_q2 = F2.inv(F2.mul(F2.reduce(q0), F2.reduce(q1)));
    u32 t1 = F1.mul(F1.sub(F1.reduce(r[1]), F1.reduce(r[0])), inv_q0_mod_q1);
    u64 x01 = r[0] + q0 * u64(t1);  // < q0*q1 < 2^59, exact
    if (np == 2) return F.reduce(x01);
    u32 x01_mod_q2 = F2.reduce(x01);
    u32 t2 = F2.mul(F2.sub(r[2], x01_mod_q2), inv_q0q1_mod_q2);
    u32 res = F.reduce(x01);
    u32 q0q1_mod_p = F.mul(F.reduce(q0), F.reduce(q1));
    return F.add(res, F.mul(q0q1_mod_p, F.reduce(t2)));
}

std::vector<u32> convolve_school(const std::vector<u32>& a, const std::vector<u32>& b,
                                 const Field& F) {
    if (a.empty() || b.empty()) return {};
    std::vector<u32> c(a.size() + b.size() - 1, 0);
    // Accumulate reduced products; at most 2^33 summands of < 2^31 would be
    // needed to overflow, far beyond any call here.
    std::vector<u64> acc(c.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) acc[i + j] += F.mul(a[i], b[j]);
    }
    for (size_t i = 0; i < c.size(); ++i) c[i] = F.reduce(acc[i]);
    return c;
}

namespace {

std::vector<u32> convolve_single(const std::vector<u32>& a, const std::vector<u32>& b,
                                 const Field& F, size_t tsize) {
    std::vector<u32> fa(tsize, 0), fb(tsize, 0);
    std::copy(a.begin(), a.end(), fa.begin());
    std::copy(b.begin(), b.end(), fb.begin());
    ntt(fa, false, F);
    ntt(fb, false, F);
    for (size_t i = 0; i < tsize; ++i) fa[i] = F.mul(fa[i], fb[i]);
    ntt(fa, true, F);
    fa.resize(a.size() + b.size() - 1);
    return fa;
}

}  // namespace

std::vector<u32> convolve(const std::vector<u32>& a, const std::vector<u32>& b, const Field& F) {
    if (a.empty() || b.empty()) return {};
    if (std::min(a.size(), b.size()) <= 48 || a.size() + b.size() <= 128)
        return convolve_school(a, b, F);
    ConvPlan plan = plan_convolution(a.size(), b.size(), F);
    if (plan.direct) return convolve_single(a, b, F, plan.transform_size);

    size_t out = a.size() + b.size() - 1;
    std::vector<std::vector<u32>> per(plan.num_primes);
    for (int i = 0; i < plan.num_primes; ++i) {
        const Field& Q = crt_field(i);
        std::vector<u32> ra(a.size()), rb(b.size());
        for (size_t j = 0; j < a.size(); ++j) ra[j] = Q.reduce(a[j]);
        for (size_t j = 0; j < b.size(); ++j) rb[j] = Q.reduce(b[j]);
        per[i] = convolve_single(ra, rb, Q, plan.transform_size);
    }
    std::vector<u32> c(out);
    u32 r[3] = {0, 0, 0};
    for (size_t j = 0; j < out; ++j) {
        for (int i = 0; i < plan.num_primes; ++i) r[i] = per[i][j];
        c[j] = crt_reconstruct(r, plan.num_primes, F);
    }
    return c;
}

}  // namespace mercode
