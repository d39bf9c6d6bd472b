#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mercode/errors.hpp"
#include "mercode/funcsolve.hpp"
#include "mercode/rng.hpp"

using namespace mercode;

static AffineOperator random_op(int m, i64 deg, const Field& F, Rng& rng) {
    AffineOperator op;
    op.q.resize(size_t(m) + 1);
    for (auto& part : op.q) part = random_poly(F, deg, rng);
    op.x_degree_bound = deg;
    return op;
}

// some part needs a nonzero constant term, otherwise x peels off
static void anchor(AffineOperator& op, Rng& rng, const Field& F) {
    bool ok = false;
    for (const Poly& part : op.q) ok = ok || poly_coeff(part, 0) != 0;
    if (ok) return;
    Poly& part = op.q[rng.below(op.q.size())];
    part.resize(std::max<size_t>(part.size(), 1), 0);
    part[0] = 1 + u32(rng.below(F.p - 1));
}

TEST_CASE("solve_pinned recovers a planted series") {
    Field F(101);
    Rng rng(11);
    const u32 gamma = F.generator;
    for (int it = 0; it < 100; ++it) {
        const int m = 1 + int(rng.below(3));
        AffineOperator op = random_op(m, i64(rng.below(8)), F, rng);
        anchor(op, rng, F);
        const size_t k = 1 + size_t(rng.below(30));
        Poly g = poly_trunc(random_poly(F, i64(k) - 1, rng), k);
        Poly b;
        for (int i = 0; i <= m; ++i)
            b = poly_add(b, poly_mul(op.q[size_t(i)], dilate_poly(g, gamma, u64(i), F), F), F);
        b = poly_neg(b, F);
        // consistent instance: the unpinned solve must reproduce g whenever
        // no diagonal in range vanishes, and g agrees on determined rows
        if (folded_zero_set(op, gamma, k, F).empty()) CHECK(solve_pinned(op, b, gamma, k, -1, F) == g);
    }
}

TEST_CASE("planted folded equations are solved with exact members") {
    for (u32 p : {101u, 7919u}) {
        Field F(p);
        Rng rng(22 + p);
        const u32 gamma = F.generator;
        for (int it = 0; it < 60; ++it) {
            const int m = 1 + int(rng.below(3));
            const i64 d = i64(rng.below(28));
            AffineOperator op = random_op(m, i64(rng.below(12)), F, rng);
            anchor(op, rng, F);
            Poly f = random_poly(F, d, rng);
            op.qfree = poly_neg(apply_folded(op, f, gamma, F), F);
            AffineSpace sp = solve_folded_equation(op, gamma, d, F);
            REQUIRE(!sp.none);
            CHECK(affine_member(sp, f, F));
            CHECK(affine_dim(sp, F) <= m);
            CHECK(poly_is_zero(apply_folded(op, sp.offset, gamma, F)));
            CHECK(poly_deg(sp.offset) <= d);
            for (const Poly& dir : sp.directions) {
                CHECK(poly_is_zero(apply_folded(op, poly_add(sp.offset, dir, F), gamma, F)));
                CHECK(poly_deg(dir) <= d);
            }
        }
    }
}

TEST_CASE("fast folded solver matches the forward-substitution reference") {
    for (u32 p : {101u, 7919u}) {
        Field F(p);
        Rng rng(33 + p);
        const u32 gamma = F.generator;
        for (int it = 0; it < 120; ++it) {
            const int m = 1 + int(rng.below(3));
            const i64 d = i64(rng.below(30));
            AffineOperator op = random_op(m, i64(rng.below(16)), F, rng);
            anchor(op, rng, F);
            if (rng.below(2) == 0) {
                Poly f = random_poly(F, d, rng);
                op.qfree = poly_neg(apply_folded(op, f, gamma, F), F);
            } else {
                op.qfree = random_poly(F, i64(rng.below(16)), rng);
            }
            AffineSpace fast = solve_folded_equation(op, gamma, d, F);
            AffineSpace slow = triangular_folded_solve(op, gamma, d, F);
            CHECK(affine_equal(fast, slow, F));
        }
    }
}

TEST_CASE("kernel directions come from the diagonal zero set") {
    Field F(101);
    const u32 gamma = F.generator;
    // P(z) = z - gamma^2 vanishes exactly at index 2, so the homogeneous
    // solutions of f(gamma x) = gamma^2 f(x) with deg <= 5 are span(x^2)
    AffineOperator op;
    op.q = {Poly{F.neg(F.pow(gamma, 2))}, Poly{1}};
    AffineSpace sp = solve_folded_equation(op, gamma, 5, F);
    REQUIRE(!sp.none);
    CHECK(poly_is_zero(sp.offset));
    REQUIRE(sp.directions.size() == 1);
    Poly want{0, 0, 1};
    CHECK(poly_scale(sp.directions[0], F.inv(sp.directions[0][2]), F) == want);
}

TEST_CASE("unsatisfiable and degenerate folded equations") {
    Field F(101);
    const u32 gamma = F.generator;
    // x f(x) = -1 has no polynomial solution: peeling leaves only a constant
    AffineOperator bad;
    bad.q = {Poly{0, 1}};
    bad.qfree = Poly{1};
    CHECK(solve_folded_equation(bad, gamma, 5, F).none);

    AffineOperator noy;
    noy.q = {Poly{}};
    noy.qfree = Poly{1};
    CHECK_THROWS_AS(solve_folded_equation(noy, gamma, 5, F), NoYSupport);

    // element of order 25 cannot support degree 30
    const u32 small = F.pow(F.generator, 4);
    AffineOperator op;
    op.q = {Poly{1}, Poly{2}};
    CHECK_THROWS_AS(solve_folded_equation(op, small, 30, F), OrderTooSmall);
    CHECK(!solve_folded_equation(op, small, 20, F).none);
}

TEST_CASE("inconsistent pinned rows surface as empty spaces, not crashes") {
    Field F(101);
    const u32 gamma = F.generator;
    // same kernel direction as above but force the constraint row to clash:
    // f(gamma x) - gamma^2 f(x) = x^2 demands 0 * f_2 = 1
    AffineOperator op;
    op.q = {Poly{F.neg(F.pow(gamma, 2))}, Poly{1}};
    op.qfree = poly_neg(Poly{0, 0, 1}, F);
    AffineSpace sp = solve_folded_equation(op, gamma, 5, F);
    CHECK(sp.none);
    CHECK(affine_equal(sp, triangular_folded_solve(op, gamma, 5, F), F));
}
