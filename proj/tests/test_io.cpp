#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "mercode/errors.hpp"
#include "mercode/io.hpp"

using namespace mercode;

static std::string word_text(const CodeParams& cp, const Codeword& w) {
    std::ostringstream out;
    write_word(out, cp, w);
    return out.str();
}

TEST_CASE("word files round trip byte for byte") {
    for (bool folded : {false, true}) {
        CodeParams cp = folded ? make_frs_code(101, 6, 3, 10) : make_mult_code(101, 6, 3, 10);
        Rng rng(folded ? 2u : 1u);
        Codeword w = corrupt(cp, encode(cp, random_message(cp, rng)), 2, rng);
        std::string text = word_text(cp, w);

        std::istringstream in(text);
        WordFile wf = read_word(in);
        CHECK(wf.code.kind == cp.kind);
        CHECK(wf.code.F.p == cp.F.p);
        CHECK(wf.code.n == cp.n);
        CHECK(wf.code.s == cp.s);
        CHECK(wf.code.d == cp.d);
        CHECK(wf.code.gamma == cp.gamma);
        CHECK(wf.code.alphas == cp.alphas);
        CHECK(wf.word == w);
        CHECK(word_text(wf.code, wf.word) == text);
    }
}

TEST_CASE("message files round trip and pad to d+1") {
    Poly f{5, 0, 7};
    std::ostringstream out;
    write_message(out, 101, 5, f);
    CHECK(out.str() == "MSG p=101 d=5\n5 0 7 0 0 0\n");
    std::istringstream in(out.str());
    MessageFile mf = read_message(in);
    CHECK(mf.p == 101);
    CHECK(mf.d == 5);
    CHECK(mf.coeffs == f);
    CHECK_THROWS_AS(write_message(out, 101, 1, f), DegreeTooLarge);
}

TEST_CASE("malformed word files report the offending line") {
    CodeParams cp = make_mult_code(101, 4, 2, 5);
    Rng rng(3);
    Codeword w = encode(cp, random_message(cp, rng));
    const std::string good = word_text(cp, w);

    auto read_str = [](const std::string& text) {
        std::istringstream in(text);
        return read_word(in);
    };

    CHECK_THROWS_AS(read_str(""), ParseError);
    CHECK_THROWS_AS(read_str("CODE kind=mult p=101 n=4 s=2\n"), ParseError);
    CHECK_THROWS_AS(read_str("CODE kind=huh p=101 n=4 s=2 d=5 gamma=0\n"), ParseError);
    CHECK_THROWS_AS(read_str("WORD kind=mult p=101 n=4 s=2 d=5 gamma=0\n"), ParseError);

    // truncated after two columns
    std::string trunc = good.substr(0, good.find('\n', good.find('\n') + 1) + 1);
    try {
        read_str(trunc);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }

    // value out of range on a column line
    std::string bad = good;
    bad.replace(bad.find("\n") + 1, 1, "999");
    CHECK_THROWS_AS(read_str(bad), ParseError);

    CHECK_THROWS_AS(read_str(good + "stray\n"), ParseError);
    CHECK_THROWS_AS(read_str("CODE kind=mult p=91 n=4 s=2 d=5 gamma=0\n"), ValidationError);
}

TEST_CASE("folded word files must carry the power-of-gamma labels") {
    CodeParams cp = make_frs_code(101, 5, 3, 9);
    Rng rng(4);
    Codeword w = encode(cp, random_message(cp, rng));
    std::string text = word_text(cp, w);

    // tamper with the second column label (first char of line 3)
    size_t l3 = text.find('\n', text.find('\n') + 1) + 1;
    text[l3] = text[l3] == '9' ? '8' : '9';
    std::istringstream in(text);
    CHECK_THROWS_AS(read_word(in), ValidationError);
}

TEST_CASE("malformed message files") {
    auto read_str = [](const std::string& text) {
        std::istringstream in(text);
        return read_message(in);
    };
    CHECK_THROWS_AS(read_str(""), ParseError);
    CHECK_THROWS_AS(read_str("MSG p=101\n1 2\n"), ParseError);
    CHECK_THROWS_AS(read_str("MSG p=101 d=2\n1 2\n"), ParseError);      // too few
    CHECK_THROWS_AS(read_str("MSG p=101 d=1\n1 2 3\n"), ParseError);    // too many
    CHECK_THROWS_AS(read_str("MSG p=101 d=1\n1 200\n"), ParseError);    // not a residue
    CHECK_THROWS_AS(read_str("MSG p=101 d=1\n1 x\n"), ParseError);
}
