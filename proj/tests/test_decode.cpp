#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mercode/decode.hpp"
#include "mercode/errors.hpp"

using namespace mercode;

static bool contains(const std::vector<Poly>& list, const Poly& f) {
    return std::find(list.begin(), list.end(), f) != list.end();
}

TEST_CASE("capacity parameter rule") {
    CapacityChoice c = choose_capacity_params(0.5);
    CHECK(c.m == 4);
    CHECK(c.s_min == 25);
    c = choose_capacity_params(1.0);
    CHECK(c.m == 2);
    CHECK(c.s_min == 9);
    c = choose_capacity_params(2.0);
    CHECK(c.m == 1);
    CHECK(c.s_min == 4);
    c = choose_capacity_params(0.1);
    CHECK(c.m == 20);
    CHECK(c.s_min == 441);
    CHECK_THROWS_AS(choose_capacity_params(0.0), ValidationError);
    CHECK_THROWS_AS(CapacityDecoder(make_mult_code(7919, 16, 9, 30), 0.5), FoldingTooSmall);
}

TEST_CASE("capacity decoding of derivative codes recovers a planted message") {
    CodeParams cp = make_mult_code(2013265921, 16, 25, 100);
    CapacityDecoder dec(cp, 0.5);
    CHECK(dec.m() == 4);
    for (u64 seed : {11ull, 12ull, 13ull, 14ull, 15ull}) {
        Rng rng(seed);
        Poly f = random_message(cp, rng);
        Codeword w = corrupt(cp, encode(cp, f), 7, rng);
        DecodeOptions opts;
        opts.seed = seed;
        DecodeTimes times;
        std::vector<Poly> list = dec.decode(w, opts, &times);
        CHECK(contains(list, f));
        CHECK(times.total_ms > 0);
        CHECK(times.total_ms + 1e-6 >=
              times.interpolate_ms + times.solve_ms + times.prune_ms - 1e-3);
        // everything reported really does lie close to the received word
        for (const Poly& g : list)
            CHECK(agreement(encode(cp, g), w) >= 16 - 7);
    }
}

TEST_CASE("capacity decoding of folded codes recovers a planted message") {
    CodeParams cp = make_frs_code(7919, 16, 25, 100);
    CapacityDecoder dec(cp, 0.5);
    for (u64 seed : {21ull, 22ull, 23ull}) {
        Rng rng(seed);
        Poly f = random_message(cp, rng);
        Codeword w = corrupt(cp, encode(cp, f), 7, rng);
        DecodeOptions opts;
        opts.seed = seed;
        std::vector<Poly> list = dec.decode(w, opts);
        CHECK(contains(list, f));
    }
}

TEST_CASE("a word straddling two codewords lists both") {
    // d = 63 keeps the worst-case agreement threshold at 7, below the 8
    // columns each planted message retains
    CodeParams cp = make_mult_code(2013265921, 16, 25, 63);
    CapacityDecoder dec(cp, 0.5);
    Rng rng(31);
    Poly f1 = random_message(cp, rng);
    Poly f2 = random_message(cp, rng);
    REQUIRE(f1 != f2);
    Codeword w1 = encode(cp, f1);
    Codeword w2 = encode(cp, f2);
    Codeword w(16);
    for (size_t j = 0; j < 16; ++j) w[j] = j < 8 ? w1[j] : w2[j];
    DecodeOptions opts;
    opts.seed = 5;
    std::vector<Poly> list = dec.decode(w, opts);
    CHECK(contains(list, f1));
    CHECK(contains(list, f2));
}

TEST_CASE("subsample pruning isolates members of a planted affine space") {
    CodeParams cp = make_mult_code(7919, 24, 5, 20);
    Rng rng(41);
    Poly f = random_message(cp, rng);
    Codeword w = corrupt(cp, encode(cp, f), 6, rng);

    AffineSpace sp;
    sp.offset = f;
    for (int j = 0; j < 4; ++j) sp.directions.push_back(random_poly(cp.F, 20, rng));
    REQUIRE(affine_dim(sp, cp.F) == 4);

    for (u64 seed = 0; seed < 20; ++seed) {
        std::vector<Poly> got = prune_candidates(cp, sp, w, 18, seed);
        CHECK(contains(got, f));
    }

    SUBCASE("degenerate spaces") {
        CHECK(prune_candidates(cp, AffineSpace::empty(), w, 18, 1).empty());
        std::vector<Poly> one = prune_candidates(cp, AffineSpace::point(f), w, 18, 1);
        REQUIRE(one.size() == 1);
        CHECK(one[0] == f);
        CHECK(prune_candidates(cp, sp, w, 25, 1).empty());  // cannot agree beyond n
    }

    SUBCASE("offset may be any representative, not the planted member") {
        AffineSpace moved = sp;
        moved.offset = poly_add(sp.offset, poly_scale(sp.directions[2], 1234, cp.F), cp.F);
        std::vector<Poly> got = prune_candidates(cp, moved, w, 18, 7);
        CHECK(contains(got, f));
    }
}

TEST_CASE("johnson decoding beyond half the minimum distance") {
    SUBCASE("derivative code") {
        CodeParams cp = make_mult_code(7919, 32, 2, 16);
        JohnsonDecoder dec(cp, 0.1);
        CHECK(dec.r() == 10);
        CHECK(dec.u() == 21);
        for (u64 seed : {51ull, 52ull}) {
            Rng rng(seed);
            Poly f = random_message(cp, rng);
            Codeword w = corrupt(cp, encode(cp, f), 13, rng);
            DecodeOptions opts;
            opts.seed = seed;
            DecodeTimes times;
            std::vector<Poly> list = dec.decode(w, opts, &times);
            CHECK(contains(list, f));
            CHECK(times.total_ms > 0);
        }
    }
    SUBCASE("folded code") {
        CodeParams cp = make_frs_code(101, 10, 2, 4);
        JohnsonDecoder dec(cp, 0.6);
        CHECK(dec.r() == 2);
        CHECK(dec.u() == 5);
        Rng rng(61);
        Poly f = random_message(cp, rng);
        Codeword w = corrupt(cp, encode(cp, f), 3, rng);
        std::vector<Poly> list = dec.decode(w);
        CHECK(contains(list, f));
    }
    SUBCASE("plain reed-solomon (s = 1)") {
        // johnson radius 1 - sqrt(1/4) = 1/2, well beyond half the minimum
        // distance (1 - 1/4)/2
        CodeParams cp = make_mult_code(7919, 64, 1, 16);
        JohnsonDecoder dec(cp, 0.15);
        Rng rng(62);
        Poly f = random_message(cp, rng);
        Codeword w = corrupt(cp, encode(cp, f), 22, rng);
        std::vector<Poly> list = dec.decode(w);
        CHECK(contains(list, f));
    }
}

TEST_CASE("decoding is deterministic in the seed") {
    CodeParams cp = make_mult_code(2013265921, 16, 25, 100);
    CapacityDecoder dec(cp, 0.5);
    Rng rng(71);
    Poly f = random_message(cp, rng);
    Codeword w = corrupt(cp, encode(cp, f), 6, rng);
    DecodeOptions opts;
    opts.seed = 99;
    std::vector<Poly> a = dec.decode(w, opts);
    std::vector<Poly> b = dec.decode(w, opts);
    CHECK(a == b);
    opts.seed = 100;
    std::vector<Poly> c = dec.decode(w, opts);
    CHECK(a == c);  // same final list under a different seed
}
