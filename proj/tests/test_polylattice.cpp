#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mercode/polylattice.hpp"
#include "mercode/rng.hpp"

using namespace mercode;

namespace {

Poly P(std::initializer_list<u32> c) {
    Poly f(c);
    poly_trim(f);
    return f;
}

}  // namespace

TEST_CASE("vector degree and leading coordinate") {
    PolyVec v{P({1, 2}), P({5}), P({0, 7})};
    CHECK(vec_degree(v) == 1);
    // ties resolve to the greatest index
    CHECK(leading_coordinate(v) == 2);
    PolyVec z{Poly{}, Poly{}};
    CHECK(vec_degree(z) == kZeroPolyDeg);
    CHECK_THROWS_AS(leading_coordinate(z), ZeroVector);
}

TEST_CASE("reduce_basis on the degree-tie pair") {
    Field F(101);
    // rows (x, 1) and (x, 0): equal degrees, shared leading coordinate 0;
    // the lower-index row gets reduced.
    LatticeBasis b{{P({0, 1}), P({1})}, {P({0, 1}), Poly{}}};
    LatticeBasis r = reduce_basis(b, F);
    CHECK(r[0][0].empty());
    CHECK(r[0][1] == P({1}));
    CHECK(r[1][0] == P({0, 1}));
    CHECK(r[1][1].empty());
    CHECK(is_reduced(r));
}

TEST_CASE("reduce_basis throws on dependent rows") {
    Field F(101);
    LatticeBasis b{{P({0, 1}), P({1})}, {P({0, 2}), P({2})}};
    CHECK_THROWS_AS(reduce_basis(b, F), DegenerateBasis);
}

TEST_CASE("det_degree triangular and dense agree") {
    Field F(101);
    Rng rng(3);
    for (int it = 0; it < 30; ++it) {
        size_t k = 2 + rng.below(2);
        LatticeBasis b(k, PolyVec(k));
        for (size_t i = 0; i < k; ++i) {
            for (size_t j = 0; j <= i; ++j) b[i][j] = random_poly(F, i64(rng.below(4)), rng);
            if (poly_is_zero(b[i][i])) b[i][i] = P({1});
        }
        i64 diag = det_degree(b, F);
        // mix rows (adds row 0 to row 1): determinant unchanged
        LatticeBasis m = b;
        for (size_t j = 0; j < k; ++j) m[1][j] = poly_add(m[1][j], m[0][j], F);
        CHECK(det_degree(m, F) == diag);
    }
}

TEST_CASE("reduction preserves determinant degree and achieves minkowski") {
    Field F(101);
    Rng rng(17);
    for (int it = 0; it < 40; ++it) {
        size_t k = 2 + rng.below(2);
        LatticeBasis b(k, PolyVec(k));
        // start from a random triangular basis with nonzero diagonal
        for (size_t i = 0; i < k; ++i) {
            for (size_t j = 0; j < i; ++j) b[i][j] = random_poly(F, i64(rng.below(5)), rng);
            Poly d = random_poly(F, 1 + i64(rng.below(4)), rng);
            if (poly_deg(d) < 1) d = P({0, 1});
            b[i][i] = d;
        }
        i64 det = det_degree(b, F);
        // scramble with elementary row operations
        for (int op = 0; op < 6; ++op) {
            size_t r1 = rng.below(k), r2 = rng.below(k);
            if (r1 == r2) continue;
            Poly f = random_poly(F, i64(rng.below(3)), rng);
            for (size_t j = 0; j < k; ++j)
                b[r1][j] = poly_add(b[r1][j], poly_mul(f, b[r2][j], F), F);
        }
        LatticeBasis r = reduce_basis(b, F);
        CHECK(is_reduced(r));
        CHECK(det_degree(r, F) == det);
        PolyVec sv = shortest_vector(b, F);
        CHECK(vec_degree(sv) <= det / i64(k));  // minkowski bound for reduced bases
    }
}

TEST_CASE("shortest vector is minimal over the lattice (exhaustive, tiny field)") {
    Field F(3);
    Rng rng(23);
    for (int it = 0; it < 15; ++it) {
        LatticeBasis b(2, PolyVec(2));
        b[0][0] = P({u32(1 + rng.below(2)), u32(rng.below(3)), 1});  // monic deg 2
        b[0][1] = random_poly(F, 1, rng);
        b[1][0] = Poly{};
        b[1][1] = P({u32(1 + rng.below(2)), 1});  // monic deg 1
        // scramble
        for (size_t j = 0; j < 2; ++j)
            b[1][j] = poly_add(b[1][j], poly_mul(P({1, 2}), b[0][j], F), F);
        i64 best = vec_degree(shortest_vector(b, F));
        // enumerate u = (u0, u1) with deg <= 3 and check no strictly shorter
        // nonzero vector u*B exists
        auto enum_poly = [&](int code) {
            Poly f;
            for (int i = 0; i < 4; ++i) {
                f.push_back(u32(code % 3));
                code /= 3;
            }
            poly_trim(f);
            return f;
        };
        for (int c0 = 0; c0 < 81; ++c0)
            for (int c1 = 0; c1 < 81; ++c1) {
                Poly u0 = enum_poly(c0), u1 = enum_poly(c1);
                PolyVec v{
                    poly_add(poly_mul(u0, b[0][0], F), poly_mul(u1, b[1][0], F), F),
                    poly_add(poly_mul(u0, b[0][1], F), poly_mul(u1, b[1][1], F), F)};
                if (vec_degree(v) == kZeroPolyDeg) continue;
                CHECK(vec_degree(v) >= best);
            }
    }
}
