#pragma once

#include <iosfwd>
#include <string>

#include "mercode/codes.hpp"

namespace mercode {

// Line-oriented text formats, decimal residues, space-separated. Diff-able
// and byte-exact: writers emit exactly what readers accept, with no optional
// whitespace.
//
// Word files (codewords and received words):
//   CODE kind=<mult|frs> p=<p> n=<n> s=<s> d=<d> gamma=<g>
//   <alpha> <v0> <v1> ... <v{s-1}>     (n lines, one per column)
//
// Message files:
//   MSG p=<p> d=<d>
//   <c0> <c1> ... <cd>                 (exactly d+1 coefficients, low first)

struct WordFile {
    CodeParams code;
    Codeword word;
};

// Throws ParseError (with a line number) on malformed input and
// ValidationError when the numbers violate a code invariant.
WordFile read_word(std::istream& in);
WordFile read_word_file(const std::string& path);

void write_word(std::ostream& out, const CodeParams& cp, const Codeword& w);
void write_word_file(const std::string& path, const CodeParams& cp, const Codeword& w);

struct MessageFile {
    u32 p = 0;
    i64 d = 0;
    Poly coeffs;  // trimmed; degree <= d
};

MessageFile read_message(std::istream& in);
MessageFile read_message_file(const std::string& path);

// Pads with zeros up to d+1 coefficients; throws DegreeTooLarge if f exceeds d.
void write_message(std::ostream& out, u32 p, i64 d, const Poly& f);
void write_message_file(const std::string& path, u32 p, i64 d, const Poly& f);

}  // namespace mercode
