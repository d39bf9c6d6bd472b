#pragma once

#include "mercode/poly.hpp"
#include "mercode/rng.hpp"

namespace mercode {

enum class CodeKind { Mult, Folded };

// Two code families over F_p, both with columns of height s and messages of
// degree <= d:
//   Mult:   column j carries f(a_j), f'(a_j), .., f^(s-1)(a_j)
//   Folded: column i carries f(g^(si)), f(g^(si+1)), .., f(g^(si+s-1))
struct CodeParams {
    CodeKind kind;
    Field F;
    size_t n;  // number of columns
    size_t s;  // column height
    i64 d;     // message degree bound
    u32 gamma = 0;            // folding element (0 for Mult)
    std::vector<u32> alphas;  // column labels: Mult evaluation points, Folded g^(si)
};

// n columns of s symbols each
using Codeword = std::vector<std::vector<u32>>;

CodeParams make_mult_code(u32 p, size_t n, size_t s, i64 d);
CodeParams make_mult_code(u32 p, std::vector<u32> alphas, size_t s, i64 d);
CodeParams make_frs_code(u32 p, size_t n, size_t s, i64 d);

// Throws ValidationError on inconsistent parameters.
void validate_code(const CodeParams& cp);

Poly random_message(const CodeParams& cp, Rng& rng);
Codeword encode(const CodeParams& cp, const Poly& f);

// Number of equal columns.
size_t agreement(const Codeword& a, const Codeword& b);

// Replace exactly e distinct columns with fresh columns differing from the
// original in at least one entry.
Codeword corrupt(const CodeParams& cp, const Codeword& w, size_t e, Rng& rng);

}  // namespace mercode
