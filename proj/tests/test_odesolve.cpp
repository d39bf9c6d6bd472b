#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mercode/errors.hpp"
#include "mercode/odesolve.hpp"
#include "mercode/rng.hpp"

using namespace mercode;

// random operator whose top part has a nonzero constant term
static AffineOperator random_normalized(int m, i64 deg, const Field& F, Rng& rng) {
    AffineOperator op;
    op.q.resize(size_t(m) + 1);
    for (auto& part : op.q) part = random_poly(F, deg, rng);
    if (poly_coeff(op.q.back(), 0) == 0) {
        op.q.back().resize(std::max<size_t>(op.q.back().size(), 1), 0);
        op.q.back()[0] = 1 + u32(rng.below(F.p - 1));
    }
    op.x_degree_bound = deg;
    return op;
}

TEST_CASE("solve_forced recovers a planted series") {
    for (u32 p : {101u, 7919u}) {
        Field F(p);
        Rng rng(101 + p);
        for (int it = 0; it < 100; ++it) {
            const int m = 1 + int(rng.below(3));
            AffineOperator op = random_normalized(m, i64(rng.below(8)), F, rng);
            const u64 n = u64(m) + rng.below(20);
            const size_t k = 1 + size_t(rng.below(30));
            Poly g = poly_trunc(random_poly(F, i64(k) - 1, rng), k);
            // force the equation b + conj(op,n)(x, dg) = 0 to hold exactly
            Poly b = poly_neg(apply_derivative(conjugate_operator(op, n, F), g, F), F);
            CHECK(solve_forced(op, b, n, k, F) == g);
        }
    }
}

TEST_CASE("solve_forced rejects unnormalized operators") {
    Field F(101);
    AffineOperator op;
    op.q = {Poly{1, 2}, Poly{0, 3}};  // top constant term zero
    CHECK_THROWS_AS(solve_forced(op, Poly{1}, 1, 4, F), NotNormalized);
    CHECK_THROWS_AS(solve_forced(op, Poly{1}, 1, 0, F), ValidationError);
}

TEST_CASE("planted equations are solved and spaces verify exactly") {
    for (u32 p : {101u, 7919u}) {
        Field F(p);
        Rng rng(202 + p);
        for (int it = 0; it < 60; ++it) {
            const int m = 1 + int(rng.below(3));
            const i64 d = m + i64(rng.below(25));
            AffineOperator op = random_normalized(m, i64(rng.below(12)), F, rng);
            Poly f = random_poly(F, d, rng);
            op.qfree = poly_neg(apply_derivative(op, f, F), F);
            AffineSpace sp = solve_derivative_equation(op, d, F);
            REQUIRE(!sp.none);
            CHECK(affine_member(sp, f, F));
            CHECK(affine_dim(sp, F) <= m);
            // every member solves the equation exactly and respects the bound
            CHECK(poly_is_zero(apply_derivative(op, sp.offset, F)));
            CHECK(poly_deg(sp.offset) <= d);
            for (const Poly& dir : sp.directions) {
                CHECK(poly_is_zero(apply_derivative(op, poly_add(sp.offset, dir, F), F)));
                CHECK(poly_deg(dir) <= d);
            }
        }
    }
}

TEST_CASE("fast solver matches the forward-substitution reference") {
    for (u32 p : {101u, 7919u}) {
        Field F(p);
        Rng rng(303 + p);
        for (int it = 0; it < 120; ++it) {
            const int m = 1 + int(rng.below(3));
            const i64 d = m + i64(rng.below(28));
            AffineOperator op = random_normalized(m, i64(rng.below(20)), F, rng);
            if (rng.below(2) == 0) {
                // planted: solvable by construction
                Poly f = random_poly(F, d, rng);
                op.qfree = poly_neg(apply_derivative(op, f, F), F);
            } else {
                // random forcing term: often unsolvable
                op.qfree = random_poly(F, i64(rng.below(20)), rng);
            }
            AffineSpace fast = solve_derivative_equation(op, d, F);
            AffineSpace slow = triangular_derivative_solve(op, d, F);
            CHECK(affine_equal(fast, slow, F));
        }
    }
}

TEST_CASE("homogeneous equations include zero and stay linear") {
    Field F(101);
    Rng rng(404);
    for (int it = 0; it < 40; ++it) {
        const int m = 1 + int(rng.below(3));
        const i64 d = m + i64(rng.below(20));
        AffineOperator op = random_normalized(m, i64(rng.below(10)), F, rng);
        AffineSpace sp = solve_derivative_equation(op, d, F);
        REQUIRE(!sp.none);
        CHECK(affine_member(sp, Poly{}, F));
    }
}

TEST_CASE("degree and support guards") {
    Field F(101);
    AffineOperator op;
    op.q = {Poly{1}, Poly{}, Poly{2}};  // m_eff = 2
    op.qfree = Poly{3};
    CHECK_THROWS_AS(solve_derivative_equation(op, 1, F), DegreeTooSmall);
    AffineOperator noy;
    noy.q = {Poly{}, Poly{}};
    noy.qfree = Poly{1};
    CHECK_THROWS_AS(solve_derivative_equation(noy, 5, F), NoYSupport);
}
