#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mercode/field.hpp"
#include "mercode/ntt.hpp"
#include "mercode/poly.hpp"
#include "mercode/rng.hpp"

using namespace mercode;

namespace {

Poly P(std::initializer_list<u32> c) {
    Poly f(c);
    poly_trim(f);
    return f;
}

}  // namespace

TEST_CASE("field basics") {
    Field F(101);
    CHECK(F.add(100, 2) == 1);
    CHECK(F.sub(1, 2) == 100);
    CHECK(F.mul(50, 50) == (50 * 50) % 101);
    CHECK(F.pow(2, 100) == 1);  // Fermat
    CHECK(F.mul(F.inv(7), 7) == 1);
    CHECK_THROWS_AS(F.inv(0), NotInvertible);
    CHECK_THROWS_AS(Field(100), ValidationError);
    CHECK_THROWS_AS(Field(2), ValidationError);

    // generator generates the full group
    CHECK(F.order(F.generator) == 100);

    Field G(2013265921);  // 15 * 2^27 + 1
    CHECK(G.two_adicity == 27);
    CHECK(G.pow(G.two_adic_root, u64(1) << 27) == 1);
    CHECK(G.pow(G.two_adic_root, u64(1) << 26) == G.p - 1);

    // random cross-check against __int128 arithmetic
    Rng rng(7);
    for (int i = 0; i < 2000; ++i) {
        u32 a = u32(rng.below(G.p)), b = u32(rng.below(G.p));
        CHECK(G.mul(a, b) == u32((u128(a) * b) % G.p));
    }
}

TEST_CASE("roots of unity and order") {
    Field F(7919);
    u32 w = F.root_of_unity(37);  // 37 | 7918 = 2 * 37 * 107
    CHECK(F.order(w) == 37);
    CHECK_THROWS_AS(F.root_of_unity(5), OrderTooSmall);
}

TEST_CASE("ntt serial matches schoolbook and omp kernel") {
    Field F(998244353);
    Rng rng(12);
    for (size_t n : {1u, 2u, 8u, 37u, 100u, 300u}) {
        Poly a(n), b(n + 3);
        for (auto& x : a) x = u32(rng.below(F.p));
        for (auto& x : b) x = u32(rng.below(F.p));
        auto school = convolve_school(a, b, F);
        auto fast = convolve(a, b, F);
        CHECK(school == fast);
    }
    // omp kernel vs serial reference on the same buffer
    std::vector<u32> buf(1 << 12);
    for (auto& x : buf) x = u32(rng.below(F.p));
    auto b1 = buf, b2 = buf;
    ntt_serial(b1, false, F);
    ntt_omp(b2, false, F);
    CHECK(b1 == b2);
    ntt_serial(b1, true, F);
    ntt_omp(b2, true, F);
    CHECK(b1 == b2);
    CHECK(b1 == buf);  // inverse of forward is identity
}

TEST_CASE("crt convolution over a non-ntt-friendly prime") {
    Field F(7919);  // 7918 = 2 * 37 * 107: two-adicity 1
    Rng rng(3);
    for (size_t n : {80u, 257u, 1000u}) {
        Poly a(n), b(n);
        for (auto& x : a) x = u32(rng.below(F.p));
        for (auto& x : b) x = u32(rng.below(F.p));
        CHECK(convolve(a, b, F) == convolve_school(a, b, F));
    }
}

TEST_CASE("poly basics") {
    Field F(101);
    Poly a = P({1, 2, 3});
    Poly b = P({5, 0, 0, 7});
    CHECK(poly_deg(a) == 2);
    CHECK(poly_deg(Poly{}) == kZeroPolyDeg);
    CHECK(poly_add(a, poly_neg(a, F), F).empty());
    CHECK(poly_mul(a, Poly{}, F).empty());
    CHECK(poly_sub(b, b, F).empty());
    CHECK(poly_eval(b, 2, F) == (5 + 7 * 8) % 101);
    CHECK(poly_mul(P({1, 1}), P({100, 1}), F) == P({100, 0, 1}));  // (x+1)(x-1) = x^2-1
}

TEST_CASE("divmod") {
    Field F(101);
    Rng rng(5);
    for (int it = 0; it < 200; ++it) {
        Poly a = random_poly(F, i64(rng.below(120)), rng);
        Poly b = random_poly(F, i64(rng.below(40)), rng);
        if (poly_is_zero(b)) {
            CHECK_THROWS_AS(poly_divmod(a, b, F), DivisionByZero);
            continue;
        }
        auto [q, r] = poly_divmod(a, b, F);
        CHECK(poly_deg(r) < poly_deg(b));
        CHECK(poly_add(poly_mul(q, b, F), r, F) == a);
    }
}

TEST_CASE("newton inverse series") {
    Field F(998244353);
    Rng rng(9);
    Poly f = random_poly(F, 200, rng);
    if (f.empty() || f[0] == 0) f = poly_add(f, P({1}), F);
    Poly g = poly_inv_series(f, 157, F);
    Poly prod = poly_mul_trunc(f, g, 157, F);
    CHECK(prod == P({1}));
    CHECK_THROWS_AS(poly_inv_series(P({0, 1}), 4, F), NotInvertible);
}

TEST_CASE("taylor shift") {
    Field F(101);
    // f = x^2: f(x+3) = x^2 + 6x + 9
    CHECK(taylor_shift(P({0, 0, 1}), 3, F) == P({9, 6, 1}));
    Rng rng(11);
    for (int it = 0; it < 50; ++it) {
        Poly f = random_poly(F, 60, rng);
        u32 c = u32(rng.below(F.p));
        Poly g = taylor_shift(f, c, F);
        for (u32 x : {0u, 1u, 5u, 77u})
            CHECK(poly_eval(g, x, F) == poly_eval(f, F.add(x, c), F));
        CHECK(taylor_shift(g, F.neg(c), F) == f);
    }
    Field tiny(7);
    Poly x7(8, 0);
    x7[7] = 1;
    CHECK_THROWS_AS(taylor_shift(x7, 1, tiny), CharacteristicTooSmall);
}

TEST_CASE("vanishing poly and multipoint eval") {
    Field F(7919);
    std::vector<u32> pts{3, 8, 100, 2000};
    Poly e = vanishing_poly(pts, 2, F);
    CHECK(poly_deg(e) == 8);
    for (u32 a : pts) {
        CHECK(poly_eval(e, a, F) == 0);
        CHECK(poly_eval(poly_derivative(e, F), a, F) == 0);  // double root
    }
    Rng rng(17);
    Poly f = random_poly(F, 500, rng);
    std::vector<u32> many;
    for (u32 i = 0; i < 120; ++i) many.push_back(u32(rng.below(F.p)));
    auto vals = multipoint_eval(f, many, F);
    for (size_t i = 0; i < many.size(); ++i) CHECK(vals[i] == poly_eval(f, many[i], F));
}

TEST_CASE("interpolation round trip") {
    Field F(7919);
    Rng rng(23);
    for (size_t n : {1u, 7u, 40u, 90u}) {
        auto idx = rng.sample_distinct(F.p, n);
        std::vector<u32> pts(idx.begin(), idx.end());
        Poly f = random_poly(F, i64(n) - 1, rng);
        auto vals = multipoint_eval(f, pts, F);
        CHECK(interpolate(pts, vals, F) == f);
    }
    CHECK_THROWS_AS(interpolate({1, 1}, {2, 3}, F), DuplicatePoint);
}

TEST_CASE("hermite interpolation") {
    Field F(7919);
    Rng rng(29);
    for (auto [n, s] : std::vector<std::pair<size_t, int>>{{1, 1}, {1, 4}, {5, 3}, {12, 5}, {40, 2}}) {
        auto idx = rng.sample_distinct(F.p, n);
        std::vector<u32> pts(idx.begin(), idx.end());
        Poly f = random_poly(F, i64(n) * s - 1, rng);
        auto ders = derivative_batch(f, s - 1, F);
        std::vector<std::vector<u32>> vals(n, std::vector<u32>(s));
        for (size_t j = 0; j < n; ++j)
            for (int k = 0; k < s; ++k) vals[j][k] = poly_eval(ders[k], pts[j], F);
        CHECK(hermite_interpolate(pts, vals, s, F) == f);
    }
    CHECK_THROWS_AS(hermite_interpolate({1, 1}, {{0}, {0}}, 1, F), DuplicatePoint);
}

TEST_CASE("hermite taylor remainders") {
    Field F(101);
    Rng rng(31);
    std::vector<u32> pts{2, 5, 9};
    int s = 4;
    HermiteSystem sys(pts, s, F);
    Poly f = random_poly(F, 30, rng);
    auto rem = sys.taylor_remainders(f, F);
    auto ders = derivative_batch(f, s - 1, F);
    const Factorials& ft = factorials(F, s);
    for (size_t j = 0; j < pts.size(); ++j)
        for (int k = 0; k < s; ++k)
            CHECK(poly_coeff(rem[j], k) ==
                  F.mul(poly_eval(ders[k], pts[j], F), ft.inv_fact[k]));
}

TEST_CASE("gcd and powmod") {
    Field F(101);
    Poly a = poly_mul(P({1, 1}), P({3, 0, 1}), F);
    Poly b = poly_mul(P({1, 1}), P({5, 1}), F);
    CHECK(poly_gcd(a, b, F) == P({1, 1}));
    // x^101 mod (x^2 - 1): x^101 = x * (x^2)^50 == x
    Poly m = P({100, 0, 1});
    CHECK(poly_powmod(P({0, 1}), 101, m, F) == P({0, 1}));
}

TEST_CASE("rng determinism and ranges") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.below(1000) == b.below(1000));
    auto s = a.sample_distinct(10, 10);
    std::vector<bool> seen(10, false);
    for (auto v : s) {
        CHECK(v < 10);
        CHECK(!seen[v]);
        seen[v] = true;
    }
    CHECK(mix_seed(1, 2) != mix_seed(1, 3));
}
