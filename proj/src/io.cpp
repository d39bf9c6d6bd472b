#include "mercode/io.hpp"

#include <fstream>
#include <sstream>

#include "mercode/errors.hpp"

namespace mercode {

static std::string at(size_t lineno) { return "line " + std::to_string(lineno) + ": "; }

static std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

static u64 parse_u64(const std::string& tok, size_t lineno) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(at(lineno) + "expected a decimal number, got '" + tok + "'");
    if (tok.size() > 19) throw ParseError(at(lineno) + "number out of range: '" + tok + "'");
    return std::stoull(tok);
}

// token of the shape key=value
static u64 parse_kv(const std::string& tok, const std::string& key, size_t lineno) {
    const std::string pre = key + "=";
    if (tok.rfind(pre, 0) != 0)
        throw ParseError(at(lineno) + "expected '" + pre + "...', got '" + tok + "'");
    return parse_u64(tok.substr(pre.size()), lineno);
}

static u32 parse_residue(const std::string& tok, u32 p, size_t lineno) {
    u64 v = parse_u64(tok, lineno);
    if (v >= p) throw ParseError(at(lineno) + "value " + tok + " is not a residue mod " +
                                 std::to_string(p));
    return u32(v);
}

// one content line; blank lines are not part of the formats
static bool next_line(std::istream& in, std::string& line, size_t& lineno) {
    if (!std::getline(in, line)) return false;
    ++lineno;
    return true;
}

static void expect_eof(std::istream& in, size_t lineno) {
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (!split_ws(line).empty())
            throw ParseError(at(lineno) + "unexpected trailing content");
    }
}

WordFile read_word(std::istream& in) {
    std::string line;
    size_t lineno = 0;
    if (!next_line(in, line, lineno)) throw ParseError("line 1: missing CODE header");
    std::vector<std::string> tok = split_ws(line);
    if (tok.size() != 7 || tok[0] != "CODE")
        throw ParseError(at(lineno) + "expected 'CODE kind=... p=... n=... s=... d=... gamma=...'");

    const std::string pre = "kind=";
    if (tok[1].rfind(pre, 0) != 0)
        throw ParseError(at(lineno) + "expected 'kind=...', got '" + tok[1] + "'");
    const std::string kind = tok[1].substr(pre.size());
    if (kind != "mult" && kind != "frs")
        throw ParseError(at(lineno) + "kind must be 'mult' or 'frs', got '" + kind + "'");

    const u64 p = parse_kv(tok[2], "p", lineno);
    const u64 n = parse_kv(tok[3], "n", lineno);
    const u64 s = parse_kv(tok[4], "s", lineno);
    const u64 d = parse_kv(tok[5], "d", lineno);
    const u64 gamma = parse_kv(tok[6], "gamma", lineno);
    if (p < 3 || p >= (u64(1) << 31)) throw ParseError(at(lineno) + "p out of range");
    if (n == 0 || n > (u64(1) << 24)) throw ParseError(at(lineno) + "n out of range");
    if (s == 0 || s > (u64(1) << 20)) throw ParseError(at(lineno) + "s out of range");
    if (d >= n * s) throw ParseError(at(lineno) + "d must be below n*s");
    if (gamma >= p) throw ParseError(at(lineno) + "gamma must be a residue mod p");

    WordFile wf{CodeParams{kind == "mult" ? CodeKind::Mult : CodeKind::Folded, Field(u32(p)),
                           size_t(n), size_t(s), i64(d), u32(gamma), {}},
                Codeword(size_t(n))};
    CodeParams& cp = wf.code;
    cp.alphas.resize(cp.n);
    for (size_t j = 0; j < cp.n; ++j) {
        if (!next_line(in, line, lineno))
            throw ParseError(at(lineno + 1) + "missing column " + std::to_string(j));
        tok = split_ws(line);
        if (tok.size() != cp.s + 1)
            throw ParseError(at(lineno) + "expected " + std::to_string(cp.s + 1) +
                             " values, got " + std::to_string(tok.size()));
        cp.alphas[j] = parse_residue(tok[0], cp.F.p, lineno);
        wf.word[j].resize(cp.s);
        for (size_t k = 0; k < cp.s; ++k) wf.word[j][k] = parse_residue(tok[k + 1], cp.F.p, lineno);
    }
    expect_eof(in, lineno);

    validate_code(cp);
    if (cp.kind == CodeKind::Folded) {
        u32 a = 1;
        const u32 step = cp.F.pow(cp.gamma, cp.s);
        for (size_t j = 0; j < cp.n; ++j) {
            if (cp.alphas[j] != a)
                throw ValidationError("column label " + std::to_string(j) +
                                      " is not the expected power of gamma");
            a = cp.F.mul(a, step);
        }
    }
    return wf;
}

void write_word(std::ostream& out, const CodeParams& cp, const Codeword& w) {
    validate_code(cp);
    if (w.size() != cp.n) throw DimensionMismatch("column count");
    out << "CODE kind=" << (cp.kind == CodeKind::Mult ? "mult" : "frs") << " p=" << cp.F.p
        << " n=" << cp.n << " s=" << cp.s << " d=" << cp.d << " gamma=" << cp.gamma << "\n";
    for (size_t j = 0; j < cp.n; ++j) {
        if (w[j].size() != cp.s) throw DimensionMismatch("column height");
        out << cp.alphas[j];
        for (u32 v : w[j]) out << ' ' << v;
        out << "\n";
    }
}

MessageFile read_message(std::istream& in) {
    std::string line;
    size_t lineno = 0;
    if (!next_line(in, line, lineno)) throw ParseError("line 1: missing MSG header");
    std::vector<std::string> tok = split_ws(line);
    if (tok.size() != 3 || tok[0] != "MSG")
        throw ParseError(at(lineno) + "expected 'MSG p=... d=...'");
    const u64 p = parse_kv(tok[1], "p", lineno);
    const u64 d = parse_kv(tok[2], "d", lineno);
    if (p < 3 || p >= (u64(1) << 31)) throw ParseError(at(lineno) + "p out of range");
    if (d > (u64(1) << 44)) throw ParseError(at(lineno) + "d out of range");

    MessageFile mf;
    mf.p = u32(p);
    mf.d = i64(d);
    if (!next_line(in, line, lineno)) throw ParseError(at(lineno + 1) + "missing coefficients");
    tok = split_ws(line);
    if (tok.size() != size_t(d) + 1)
        throw ParseError(at(lineno) + "expected " + std::to_string(d + 1) +
                         " coefficients, got " + std::to_string(tok.size()));
    mf.coeffs.resize(tok.size());
    for (size_t i = 0; i < tok.size(); ++i) mf.coeffs[i] = parse_residue(tok[i], mf.p, lineno);
    poly_trim(mf.coeffs);
    expect_eof(in, lineno);
    return mf;
}

void write_message(std::ostream& out, u32 p, i64 d, const Poly& f) {
    if (poly_deg(f) > d) throw DegreeTooLarge();
    out << "MSG p=" << p << " d=" << d << "\n";
    for (i64 i = 0; i <= d; ++i) {
        if (i) out << ' ';
        out << poly_coeff(f, size_t(i));
    }
    out << "\n";
}

static std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return in;
}

static std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    return out;
}

WordFile read_word_file(const std::string& path) {
    std::ifstream in = open_in(path);
    return read_word(in);
}

void write_word_file(const std::string& path, const CodeParams& cp, const Codeword& w) {
    std::ofstream out = open_out(path);
    write_word(out, cp, w);
}

MessageFile read_message_file(const std::string& path) {
    std::ifstream in = open_in(path);
    return read_message(in);
}

void write_message_file(const std::string& path, u32 p, i64 d, const Poly& f) {
    std::ofstream out = open_out(path);
    write_message(out, p, d, f);
}

}  // namespace mercode
