#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mercode/errors.hpp"
#include "mercode/rng.hpp"
#include "mercode/rootfind.hpp"

using namespace mercode;

static Poly linear_factor(u32 root, const Field& F) { return Poly{F.neg(root), 1}; }

TEST_CASE("univariate roots by scan") {
    Field F(101);
    Poly f{1};
    for (u32 r : {2u, 5u, 5u, 7u}) f = poly_mul(f, linear_factor(r, F), F);
    f = poly_scale(f, 33, F);
    CHECK(univariate_roots(f, F) == std::vector<u32>{2, 5, 7});
    CHECK(univariate_roots(Poly{42}, F).empty());
    CHECK_THROWS_AS(univariate_roots(Poly{}, F), ZeroPolynomial);
    // no roots at all
    Poly none{1, 0, 1};  // x^2 + 1, and -1 is a non-square mod 101? 10^2 = 100 = -1
    CHECK(univariate_roots(none, F) == std::vector<u32>{10, 91});
}

TEST_CASE("univariate roots by splitting in a large field") {
    Field F(2013265921);
    Rng rng(55);
    for (int it = 0; it < 10; ++it) {
        std::vector<u32> roots;
        while (roots.size() < 6) {
            u32 r = u32(rng.below(F.p));
            if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
        Poly f{1};
        for (u32 r : roots) f = poly_mul(f, linear_factor(r, F), F);
        // multiply by a rootless quadratic x^2 + c (-c a non-square) to
        // exercise the gcd step
        u32 c;
        do {
            c = u32(1 + rng.below(F.p - 1));
        } while (F.pow(F.neg(c), (F.p - 1) / 2) == 1);
        f = poly_mul(f, Poly{c, 0, 1}, F);
        std::sort(roots.begin(), roots.end());
        CHECK(univariate_roots(f, F, 7) == roots);
    }
}

// brute force over all messages of degree <= dmax
static std::vector<Poly> brute_roots(const BivariatePoly& q, i64 dmax, const Field& F) {
    std::vector<Poly> out;
    std::vector<u32> c(size_t(dmax) + 1, 0);
    const u64 total = [&] {
        u64 t = 1;
        for (i64 i = 0; i <= dmax; ++i) t *= F.p;
        return t;
    }();
    for (u64 it = 0; it < total; ++it) {
        Poly f(c);
        poly_trim(f);
        if (poly_is_zero(bivariate_eval(q, f, F))) out.push_back(f);
        for (size_t i = 0; i <= size_t(dmax); ++i) {
            if (++c[i] < F.p) break;
            c[i] = 0;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

TEST_CASE("bivariate roots match brute force on random instances") {
    Rng rng(66);
    for (u32 p : {5u, 7u, 11u}) {
        Field F(p);
        for (int it = 0; it < 25; ++it) {
            const int dy = 1 + int(rng.below(4));
            const i64 dmax = i64(rng.below(4)) - (p == 11 ? 1 : 0);
            if (dmax < 0) continue;
            BivariatePoly q;
            q.cy.resize(size_t(dy) + 1);
            do {
                for (auto& cyt : q.cy) cyt = random_poly(F, i64(rng.below(5)) - 1, rng);
            } while (q.zero());
            CHECK(bivariate_roots(q, dmax, F) == brute_roots(q, dmax, F));
        }
    }
}

TEST_CASE("bivariate roots on planted factorizations") {
    Field F(101);
    Rng rng(77);
    for (int it = 0; it < 30; ++it) {
        const i64 dmax = i64(rng.below(6));
        Poly f1 = random_poly(F, dmax, rng);
        Poly f2 = random_poly(F, dmax, rng);
        // Q = (y - f1)(y - f2) * (x y + 1)
        BivariatePoly a{{poly_mul(f1, f2, F), poly_neg(poly_add(f1, f2, F), F), Poly{1}}};
        BivariatePoly b{{Poly{1}, Poly{0, 1}}};
        BivariatePoly q;
        q.cy.resize(4);
        for (size_t i = 0; i < a.cy.size(); ++i)
            for (size_t j = 0; j < b.cy.size(); ++j)
                q.cy[i + j] = poly_add(q.cy[i + j], poly_mul(a.cy[i], b.cy[j], F), F);
        std::vector<Poly> roots = bivariate_roots(q, dmax, F);
        std::vector<Poly> want{f1, f2};
        std::sort(want.begin(), want.end());
        want.erase(std::unique(want.begin(), want.end()), want.end());
        CHECK(roots == want);
    }
}

TEST_CASE("repeated and x-shifted roots are found") {
    Field F(11);
    // y^2: the zero message with multiplicity
    CHECK(bivariate_roots(BivariatePoly{{Poly{}, Poly{}, Poly{1}}}, 3, F) ==
          std::vector<Poly>{Poly{}});
    // y^2 - x has no polynomial root
    CHECK(bivariate_roots(BivariatePoly{{Poly{0, 10}, Poly{}, Poly{1}}}, 3, F).empty());
    // (y - x g)^2 with the root hidden behind an x factor
    Poly g{3, 1};
    Poly xg = poly_shift_up(g, 1);
    BivariatePoly q{{poly_mul(xg, xg, F), poly_scale(xg, F.neg(2), F), Poly{1}}};
    CHECK(bivariate_roots(q, 2, F) == std::vector<Poly>{xg});
    CHECK_THROWS_AS(bivariate_roots(BivariatePoly{}, 3, F), ZeroPolynomial);
}
