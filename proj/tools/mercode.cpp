#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "mercode/decode.hpp"
#include "mercode/errors.hpp"
#include "mercode/funcsolve.hpp"
#include "mercode/io.hpp"
#include "mercode/odesolve.hpp"
#include "mercode/rootfind.hpp"

using namespace mercode;

namespace {

CodeParams build_code(const std::string& kind, u32 p, size_t n, size_t s, i64 d) {
    return kind == "mult" ? make_mult_code(p, n, s, d) : make_frs_code(p, n, s, d);
}

struct EncodeArgs {
    std::string kind = "mult";
    u32 p = 2013265921;
    size_t n = 0, s = 0;
    i64 d = -1;
    double rate = 0;
    std::string msg, out;
    u64 seed = 0;
};

int cmd_encode(const EncodeArgs& a) {
    i64 d = a.d;
    if (d < 0) {
        if (!(a.rate > 0 && a.rate < 1)) throw ValidationError("need --d or --rate in (0,1)");
        d = i64(std::llround(a.rate * double(a.n) * double(a.s)));
    }
    CodeParams cp = build_code(a.kind, a.p, a.n, a.s, d);
    Poly f;
    if (!a.msg.empty()) {
        MessageFile mf = read_message_file(a.msg);
        if (mf.p != cp.F.p) throw ValidationError("message modulus differs from code modulus");
        f = mf.coeffs;
    } else {
        Rng rng(a.seed);
        f = random_message(cp, rng);
        write_message(std::cout, cp.F.p, cp.d, f);  // so the round trip is checkable
    }
    write_word_file(a.out, cp, encode(cp, f));
    return 0;
}

struct CorruptArgs {
    std::string code, out;
    size_t errors = 0;
    u64 seed = 0;
};

int cmd_corrupt(const CorruptArgs& a) {
    WordFile wf = read_word_file(a.code);
    Rng rng(a.seed);
    write_word_file(a.out, wf.code, corrupt(wf.code, wf.word, a.errors, rng));
    return 0;
}

struct DecodeArgs {
    std::string code, mode = "capacity", out;
    double epsilon = 0.5;
    u64 seed = 0;
    double prune_constant = 4.0;
};

int cmd_decode(const DecodeArgs& a) {
    WordFile wf = read_word_file(a.code);
    const CodeParams& cp = wf.code;
    DecodeOptions opts;
    opts.seed = a.seed;
    opts.prune_constant = a.prune_constant;
    std::vector<Poly> list;
    if (a.mode == "capacity") {
        list = CapacityDecoder(cp, a.epsilon).decode(wf.word, opts);
    } else {
        list = JohnsonDecoder(cp, a.epsilon).decode(wf.word, opts);
    }
    std::ostringstream report;
    for (const Poly& f : list) {
        report << "agreement=" << agreement(encode(cp, f), wf.word) << ":";
        for (i64 i = 0; i <= cp.d; ++i) report << ' ' << poly_coeff(f, size_t(i));
        report << "\n";
    }
    std::cout << report.str();
    if (!a.out.empty()) {
        std::ofstream out(a.out);
        if (!out) throw Error("cannot write " + a.out);
        out << report.str();
    }
    return list.empty() ? 2 : 0;
}

struct BenchArgs {
    std::string mode = "capacity";
    u32 p = 2013265921;
    size_t s = 25;
    double rate = 0.25;
    double epsilon = 0.5;
    double error_frac = 0.24;
    size_t nmin = 1024, nmax = 16384;
    int trials = 3;
    u64 seed = 0;
};

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const size_t h = v.size() / 2;
    return v.size() % 2 ? v[h] : (v[h - 1] + v[h]) / 2;
}

int cmd_bench(const BenchArgs& a) {
    if (a.mode != "capacity") throw ValidationError("bench supports --mode capacity");
    if (a.nmin < 1 || a.nmin > a.nmax) throw ValidationError("need 1 <= nmin <= nmax");
    std::cout << "n,interp_ms,solve_ms,prune_ms,total_ms\n";
    for (size_t n = a.nmin; n <= a.nmax; n *= 2) {
        const i64 d = i64(std::llround(a.rate * double(n) * double(a.s)));
        CodeParams cp = make_mult_code(a.p, n, a.s, d);
        CapacityDecoder dec(cp, a.epsilon);  // shared per rung: point-dependent setup amortized
        const size_t e = size_t(a.error_frac * double(n));
        std::vector<double> interp, solve, prune, total;
        for (int t = 0; t < a.trials; ++t) {
            Rng rng(mix_seed(a.seed, n * 131 + u64(t)));
            Poly f = random_message(cp, rng);
            Codeword w = corrupt(cp, encode(cp, f), e, rng);
            DecodeOptions opts;
            opts.seed = mix_seed(a.seed, 0x6265 + u64(t));
            DecodeTimes tm;
            dec.decode(w, opts, &tm);
            interp.push_back(tm.interpolate_ms);
            solve.push_back(tm.solve_ms);
            prune.push_back(tm.prune_ms);
            total.push_back(tm.total_ms);
        }
        std::cout << n << ',' << std::fixed << std::setprecision(3) << median(interp) << ','
                  << median(solve) << ',' << median(prune) << ',' << median(total) << std::endl;
    }
    return 0;
}

// ---- selftest: oracle-equivalence and round-trip suites at reduced counts ----

struct Suite {
    std::string name;
    int pass = 0, total = 0;
};

AffineOperator random_operator(int m, i64 deg, const Field& F, Rng& rng, bool derivative) {
    AffineOperator op;
    op.q.resize(size_t(m) + 1);
    for (auto& part : op.q) part = random_poly(F, deg, rng);
    if (derivative) {
        // keep the top part constant-term anchored so normalization is cheap
        if (poly_coeff(op.q.back(), 0) == 0) {
            op.q.back().resize(std::max<size_t>(op.q.back().size(), 1), 0);
            op.q.back()[0] = 1 + u32(rng.below(F.p - 1));
        }
    } else {
        bool ok = false;
        for (const Poly& part : op.q) ok = ok || poly_coeff(part, 0) != 0;
        if (!ok) {
            Poly& part = op.q[rng.below(op.q.size())];
            part.resize(std::max<size_t>(part.size(), 1), 0);
            part[0] = 1 + u32(rng.below(F.p - 1));
        }
    }
    op.x_degree_bound = deg;
    return op;
}

bool space_is_exact(const AffineSpace& sp, const std::function<Poly(const Poly&)>& residual,
                    i64 d, const Field& F) {
    if (sp.none) return true;
    if (!poly_is_zero(residual(sp.offset)) || poly_deg(sp.offset) > d) return false;
    for (const Poly& dir : sp.directions)
        if (!poly_is_zero(residual(poly_add(sp.offset, dir, F))) || poly_deg(dir) > d)
            return false;
    return true;
}

Suite suite_ode_oracle(u64 seed, int trials, bool inject) {
    Suite s{"ode-oracle"};
    Field F(7919);
    Rng rng(mix_seed(seed, 1));
    bool injected = false;
    for (int it = 0; it < trials; ++it) {
        const int m = 1 + int(rng.below(3));
        const i64 d = m + i64(rng.below(25));
        AffineOperator op = random_operator(m, i64(rng.below(15)), F, rng, true);
        if (rng.below(2) == 0) {
            Poly f = random_poly(F, d, rng);
            op.qfree = poly_neg(apply_derivative(op, f, F), F);
        } else {
            op.qfree = random_poly(F, i64(rng.below(15)), rng);
        }
        AffineSpace fast = solve_derivative_equation(op, d, F);
        if (inject && !injected && !fast.none) {
            fast.offset.resize(std::max<size_t>(fast.offset.size(), 1), 0);
            fast.offset[0] = F.add(fast.offset[0], 1);
            poly_trim(fast.offset);
            injected = true;
        }
        AffineSpace slow = triangular_derivative_solve(op, d, F);
        const bool ok =
            affine_equal(fast, slow, F) &&
            space_is_exact(fast, [&](const Poly& g) { return apply_derivative(op, g, F); }, d, F);
        s.pass += ok ? 1 : 0;
        ++s.total;
    }
    return s;
}

Suite suite_func_oracle(u64 seed, int trials) {
    Suite s{"functional-oracle"};
    Field F(7919);
    const u32 gamma = F.generator;
    Rng rng(mix_seed(seed, 2));
    for (int it = 0; it < trials; ++it) {
        const int m = 1 + int(rng.below(3));
        const i64 d = i64(rng.below(28));
        AffineOperator op = random_operator(m, i64(rng.below(15)), F, rng, false);
        if (rng.below(2) == 0) {
            Poly f = random_poly(F, d, rng);
            op.qfree = poly_neg(apply_folded(op, f, gamma, F), F);
        } else {
            op.qfree = random_poly(F, i64(rng.below(15)), rng);
        }
        AffineSpace fast = solve_folded_equation(op, gamma, d, F);
        AffineSpace slow = triangular_folded_solve(op, gamma, d, F);
        const bool ok =
            affine_equal(fast, slow, F) &&
            space_is_exact(fast, [&](const Poly& g) { return apply_folded(op, g, gamma, F); }, d, F);
        s.pass += ok ? 1 : 0;
        ++s.total;
    }
    return s;
}

Suite suite_capacity(const char* name, const CodeParams& cp, size_t errors, u64 seed, int trials) {
    Suite s{name};
    CapacityDecoder dec(cp, 0.5);
    for (int it = 0; it < trials; ++it) {
        Rng rng(mix_seed(seed, 100 + u64(it)));
        Poly f = random_message(cp, rng);
        Codeword w = corrupt(cp, encode(cp, f), errors, rng);
        DecodeOptions opts;
        opts.seed = mix_seed(seed, 200 + u64(it));
        std::vector<Poly> list = dec.decode(w, opts);
        s.pass += std::count(list.begin(), list.end(), f) == 1 ? 1 : 0;
        ++s.total;
    }
    return s;
}

Suite suite_johnson(u64 seed, int trials) {
    Suite s{"johnson"};
    CodeParams cp = make_mult_code(7919, 32, 2, 16);
    JohnsonDecoder dec(cp, 0.1);
    for (int it = 0; it < trials; ++it) {
        Rng rng(mix_seed(seed, 300 + u64(it)));
        Poly f = random_message(cp, rng);
        Codeword w = corrupt(cp, encode(cp, f), 13, rng);
        std::vector<Poly> list = dec.decode(w);
        s.pass += std::count(list.begin(), list.end(), f) == 1 ? 1 : 0;
        ++s.total;
    }
    return s;
}

Suite suite_roots(u64 seed, int trials) {
    Suite s{"roots-brute"};
    Rng rng(mix_seed(seed, 4));
    for (int it = 0; it < trials; ++it) {
        Field F(it % 2 ? 5 : 7);
        const i64 dmax = i64(rng.below(3));
        BivariatePoly q;
        q.cy.resize(1 + rng.below(4));
        do {
            for (auto& cyt : q.cy) cyt = random_poly(F, i64(rng.below(5)) - 1, rng);
        } while (q.zero());
        std::vector<Poly> fast = bivariate_roots(q, dmax, F);

        std::vector<Poly> brute;
        std::vector<u32> c(size_t(dmax) + 1, 0);
        u64 total = 1;
        for (i64 i = 0; i <= dmax; ++i) total *= F.p;
        for (u64 jt = 0; jt < total; ++jt) {
            Poly f(c);
            poly_trim(f);
            if (poly_is_zero(bivariate_eval(q, f, F))) brute.push_back(f);
            for (size_t i = 0; i <= size_t(dmax); ++i) {
                if (++c[i] < F.p) break;
                c[i] = 0;
            }
        }
        std::sort(brute.begin(), brute.end());
        s.pass += fast == brute ? 1 : 0;
        ++s.total;
    }
    return s;
}

struct SelftestArgs {
    u64 seed = 0;
    bool inject_fault = false;
};

int cmd_selftest(const SelftestArgs& a) {
    std::vector<Suite> suites;
    suites.push_back(suite_ode_oracle(a.seed, 60, a.inject_fault));
    suites.push_back(suite_func_oracle(a.seed, 60));
    suites.push_back(
        suite_capacity("capacity-mult", make_mult_code(2013265921, 16, 25, 100), 7, a.seed, 5));
    suites.push_back(
        suite_capacity("capacity-frs", make_frs_code(7919, 16, 25, 100), 7, a.seed, 3));
    suites.push_back(suite_johnson(a.seed, 2));
    suites.push_back(suite_roots(a.seed, 20));

    bool all = true;
    for (const Suite& s : suites) {
        std::cout << std::left << std::setw(20) << s.name << s.pass << "/" << s.total << "\n";
        all = all && s.pass == s.total;
    }
    std::cout << (all ? "selftest OK" : "selftest FAILED") << "\n";
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"list decoding of multiplicity and folded reed-solomon codes"};
    app.require_subcommand(1);

    EncodeArgs ea;
    CLI::App* enc = app.add_subcommand("encode", "encode a message file (or a random message)");
    enc->add_option("--kind", ea.kind, "code family")->check(CLI::IsMember({"mult", "frs"}));
    enc->add_option("--p", ea.p, "field modulus");
    enc->add_option("--n", ea.n, "number of columns")->required();
    enc->add_option("--s", ea.s, "column height")->required();
    enc->add_option("--d", ea.d, "message degree bound");
    enc->add_option("--rate", ea.rate, "rate d/(sn), used when --d is absent");
    enc->add_option("--msg", ea.msg, "message file (random message when absent)");
    enc->add_option("--seed", ea.seed, "seed for the random message");
    enc->add_option("--out", ea.out, "output codeword file")->required();

    CorruptArgs ca;
    CLI::App* cor = app.add_subcommand("corrupt", "resample columns of a word file");
    cor->add_option("--code", ca.code, "input word file")->required();
    cor->add_option("--errors", ca.errors, "number of columns to corrupt")->required();
    cor->add_option("--seed", ca.seed, "corruption seed");
    cor->add_option("--out", ca.out, "output word file")->required();

    DecodeArgs da;
    CLI::App* dec = app.add_subcommand("decode", "list-decode a received word");
    dec->add_option("--code", da.code, "received word file")->required();
    dec->add_option("--mode", da.mode, "decoding radius regime")
        ->check(CLI::IsMember({"capacity", "johnson"}));
    dec->add_option("--epsilon", da.epsilon, "distance-to-radius slack")->required();
    dec->add_option("--seed", da.seed, "pruning seed");
    dec->add_option("--prune-constant", da.prune_constant, "pruning trial multiplier");
    dec->add_option("--out", da.out, "also write the report to this file");

    BenchArgs ba;
    CLI::App* ben = app.add_subcommand("bench", "decode-time scaling ladder (CSV)");
    ben->add_option("--mode", ba.mode, "decoding regime");
    ben->add_option("--p", ba.p, "NTT-friendly field modulus");
    ben->add_option("--s", ba.s, "column height");
    ben->add_option("--rate", ba.rate, "rate d/(sn)");
    ben->add_option("--epsilon", ba.epsilon, "distance-to-radius slack");
    ben->add_option("--error-frac", ba.error_frac, "corrupted column fraction");
    ben->add_option("--nmin", ba.nmin, "first ladder rung");
    ben->add_option("--nmax", ba.nmax, "last ladder rung");
    ben->add_option("--trials", ba.trials, "decodes per rung (median reported)");
    ben->add_option("--seed", ba.seed, "experiment seed");

    SelftestArgs sa;
    CLI::App* st = app.add_subcommand("selftest", "reduced-count verification suites");
    st->add_option("--seed", sa.seed, "suite seed");
    st->add_flag("--inject-fault", sa.inject_fault, "flip one solver coefficient (must fail)");

    try {
        app.parse(argc, argv);
        if (enc->parsed()) return cmd_encode(ea);
        if (cor->parsed()) return cmd_corrupt(ca);
        if (dec->parsed()) return cmd_decode(da);
        if (ben->parsed()) return cmd_bench(ba);
        if (st->parsed()) return cmd_selftest(sa);
        return 1;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
