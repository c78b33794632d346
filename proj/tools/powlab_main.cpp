// powlab: exact counting experiments on powered numbers in short intervals.
//
// Every report is written to stdout with fixed field order; timing goes to
// stderr so repeated runs with the same arguments are byte-identical.

#include "powlab/abc_ap.hpp"
#include "powlab/factor.hpp"
#include "powlab/interval_lab.hpp"
#include "powlab/report_io.hpp"
#include "powlab/sieve.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace powlab;

unsigned default_threads() {
    if (const char* env = std::getenv("POWLAB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    }
    return 1;
}

struct CommonOpts {
    std::string output = "json";
    unsigned threads = default_threads();
    std::uint64_t seed = 0x9E3779B97F4A7C15ull;
    std::size_t segment_size = 1u << 16;
    std::uint64_t spf_limit = 1ull << 26;

    SieveConfig sieve() const {
        SieveConfig cfg;
        cfg.spf_limit = spf_limit;
        cfg.segment_size = segment_size;
        cfg.rng_seed = seed;
        cfg.threads = threads;
        return cfg;
    }
};

void add_common(CLI::App* sub, CommonOpts& opts) {
    sub->add_option("--output", opts.output, "Report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--threads", opts.threads, "Worker threads (env POWLAB_THREADS)")
        ->check(CLI::Range(1u, 1024u))
        ->capture_default_str();
    sub->add_option("--seed", opts.seed, "Seed for randomized factoring paths")
        ->capture_default_str();
    sub->add_option("--segment-size", opts.segment_size, "Sieve segment length")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 24))
        ->capture_default_str();
    sub->add_option("--spf-limit", opts.spf_limit,
                    "Largest prime for the full-factor sieve regime")
        ->capture_default_str();
}

void emit_json(const OrderedJson& j) {
    std::cout << j.dump(2) << '\n';
}

void emit_report(const CountReport& r, const CommonOpts& opts) {
    if (opts.output == "json")
        emit_json(report_to_json(r));
    else
        std::cout << report_csv_table({r});
    std::cerr << "elapsed_ms=" << r.elapsed.count() * 1000.0 << '\n';
}

std::map<std::string, double> parse_constants(const std::vector<std::string>& items) {
    std::map<std::string, double> out;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ParameterError("constant must be NAME=VALUE: " + item);
        try {
            out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw ParameterError("bad constant value in: " + item);
        }
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"exact experiments on powered numbers in short intervals"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    // Shared option storage (one subcommand runs per invocation).
    CommonOpts opts;
    std::string arg_x = "0", arg_y = "1", arg_n, arg_d, arg_k = "2", arg_delta = "0",
                arg_alpha = "1/2", arg_w = "2", arg_z, arg_pred = "powerful", arg_form;
    std::uint64_t arg_nmax = 1500, arg_bigN = 0, arg_exact_cap = 0;
    std::size_t arg_len = 3;
    unsigned arg_rk_k = 3;
    std::string arg_method = "auto";
    std::vector<std::string> arg_consts;
    double arg_boundN = 0.0;

    const auto lab_cfg = [&]() {
        LabConfig cfg;
        cfg.sieve = opts.sieve();
        cfg.constants = parse_constants(arg_consts);
        return cfg;
    };
    const auto interval = [&]() { return Interval{parse_natural(arg_x), parse_natural(arg_y)}; };

    auto* factor_cmd = app.add_subcommand("factor", "Exact prime factorization of n");
    factor_cmd->add_option("--n", arg_n, "Integer to factor")->required();
    add_common(factor_cmd, opts);
    factor_cmd->callback([&] {
        const Natural n = parse_natural(arg_n);
        FactorConfig fc;
        fc.rng_seed = opts.seed;
        const Factorization f = factor(n, fc);
        if (opts.output == "json") {
            emit_json(factorization_to_json(n, f));
        } else {
            std::cout << "p,e\n";
            for (const auto& e : f.entries())
                std::cout << to_decimal(e.prime) << ',' << e.exponent << '\n';
        }
    });

    auto* powerful_cmd = app.add_subcommand("powerful", "Powerful numbers in (x, x+y]");
    powerful_cmd->add_option("--x", arg_x)->required();
    powerful_cmd->add_option("--y", arg_y)->required();
    add_common(powerful_cmd, opts);
    powerful_cmd->callback([&] {
        const auto iv = interval();
        const auto values = enumerate_powerful(iv);
        if (opts.output == "json")
            emit_json(values_to_json(iv, values));
        else
            std::cout << values_csv(values);
    });

    auto* rough_cmd = app.add_subcommand(
        "rough", "Count n in (x, x+y] with no prime factor p, p^2 <= y (bound 2y/log y)");
    rough_cmd->add_option("--x", arg_x)->required();
    rough_cmd->add_option("--y", arg_y)->required();
    rough_cmd->add_option("--const", arg_consts, "Bound constant NAME=VALUE");
    add_common(rough_cmd, opts);
    rough_cmd->callback([&] { emit_report(count_rough_report(interval(), lab_cfg()), opts); });

    auto* t1_cmd = app.add_subcommand(
        "count-t1", "k-powered n whose powerful part is y^(1-delta)-smooth");
    t1_cmd->add_option("--x", arg_x)->required();
    t1_cmd->add_option("--y", arg_y)->required();
    t1_cmd->add_option("--k", arg_k, "Threshold k as p/q")->required();
    t1_cmd->add_option("--delta", arg_delta, "delta in [0,1) as p/q")->capture_default_str();
    t1_cmd->add_option("--const", arg_consts, "Bound constant NAME=VALUE");
    add_common(t1_cmd, opts);
    t1_cmd->callback([&] {
        emit_report(count_t1(interval(), PoweredThreshold::parse(arg_k),
                             Rational::parse(arg_delta), lab_cfg()),
                    opts);
    });

    auto* t2_cmd = app.add_subcommand("count-t2", "k-powered n with w-smooth squarefree part");
    t2_cmd->add_option("--x", arg_x)->required();
    t2_cmd->add_option("--y", arg_y)->required();
    t2_cmd->add_option("--k", arg_k, "Threshold k as p/q")->required();
    t2_cmd->add_option("--w", arg_w, "Smoothness bound w")->required();
    t2_cmd->add_option("--const", arg_consts, "Bound constant NAME=VALUE");
    add_common(t2_cmd, opts);
    t2_cmd->callback([&] {
        emit_report(count_t2(interval(), PoweredThreshold::parse(arg_k), parse_natural(arg_w),
                             lab_cfg()),
                    opts);
    });

    auto* powered_cmd = app.add_subcommand("count-powered", "All k-powered n in (x, x+y]");
    powered_cmd->add_option("--x", arg_x)->required();
    powered_cmd->add_option("--y", arg_y)->required();
    powered_cmd->add_option("--k", arg_k, "Threshold k as p/q")->required();
    powered_cmd->add_option("--form", arg_form, "Bound shape")
        ->check(CLI::IsMember({"loglog_power", "log_power"}))
        ->default_val("loglog_power");
    powered_cmd->add_option("--const", arg_consts, "Bound constant NAME=VALUE");
    add_common(powered_cmd, opts);
    powered_cmd->callback([&] {
        const auto form = arg_form == "log_power" ? PoweredBoundForm::log_power
                                                  : PoweredBoundForm::loglog_power;
        emit_report(count_powered(interval(), PoweredThreshold::parse(arg_k), lab_cfg(), form),
                    opts);
    });

    auto* eq1_cmd = app.add_subcommand("count-eq1", "Powerful n with p+(n)^2 <= y");
    eq1_cmd->add_option("--x", arg_x)->required();
    eq1_cmd->add_option("--y", arg_y)->required();
    eq1_cmd->add_option("--const", arg_consts, "Bound constant NAME=VALUE");
    add_common(eq1_cmd, opts);
    eq1_cmd->callback([&] { emit_report(count_smooth_powerful(interval(), lab_cfg()), opts); });

    auto* eq3_cmd = app.add_subcommand(
        "count-eq3", "n whose squarefree part is log(y+1)loglog(y+2)-smooth");
    eq3_cmd->add_option("--x", arg_x)->required();
    eq3_cmd->add_option("--y", arg_y)->required();
    eq3_cmd->add_option("--const", arg_consts, "Bound constant NAME=VALUE");
    add_common(eq3_cmd, opts);
    eq3_cmd->callback([&] { emit_report(count_verysmooth(interval(), lab_cfg()), opts); });

    auto* sdiv_cmd = app.add_subcommand(
        "sdivisor", "n in (x, x+y] having a w-smooth divisor greater than y^alpha");
    sdiv_cmd->add_option("--x", arg_x)->required();
    sdiv_cmd->add_option("--y", arg_y)->required();
    sdiv_cmd->add_option("--alpha", arg_alpha, "alpha in (0,1] as p/q")->capture_default_str();
    sdiv_cmd->add_option("--w", arg_w, "Smoothness bound w")->required();
    sdiv_cmd->add_option("--const", arg_consts, "Bound constant NAME=VALUE");
    add_common(sdiv_cmd, opts);
    sdiv_cmd->callback([&] {
        emit_report(count_smooth_divisor(interval(), Rational::parse(arg_alpha),
                                         parse_natural(arg_w), lab_cfg()),
                    opts);
    });

    auto* cases_cmd = app.add_subcommand(
        "cases", "Four-way decomposition n = a1 a2 b1 b2 and its case label");
    cases_cmd->add_option("--x", arg_x)->required();
    cases_cmd->add_option("--y", arg_y)->required();
    cases_cmd->add_option("--k", arg_k, "Threshold k as p/q")->capture_default_str();
    cases_cmd->add_option("--z", arg_z, "Split point z (default floor(y^((k-1)/k)))");
    cases_cmd->add_option("--delta", arg_delta, "delta as p/q")->capture_default_str();
    cases_cmd->add_option("--n", arg_n, "Decompose a single n instead of the histogram");
    add_common(cases_cmd, opts);
    cases_cmd->callback([&] {
        const auto iv = interval();
        const auto k = PoweredThreshold::parse(arg_k);
        const Natural z = arg_z.empty() ? default_z(iv.y, k) : parse_natural(arg_z);
        if (!arg_n.empty()) {
            const auto d =
                decompose_case(parse_natural(arg_n), iv, k, z, Rational::parse(arg_delta));
            if (opts.output == "json") {
                emit_json(decomposition_to_json(d));
            } else {
                std::cout << "n,a,b,a1,a2,b1,b2,label\n"
                          << to_decimal(d.n) << ',' << to_decimal(d.a) << ',' << to_decimal(d.b)
                          << ',' << to_decimal(d.a1) << ',' << to_decimal(d.a2) << ','
                          << to_decimal(d.b1) << ',' << to_decimal(d.b2) << ','
                          << case_label_name(d.label) << '\n';
            }
            return;
        }
        const auto h = case_histogram(iv, k, z, Rational::parse(arg_delta), lab_cfg());
        if (opts.output == "json") {
            emit_json(histogram_to_json(h, k));
        } else {
            std::cout << "label,count\n";
            for (const auto label : {CaseLabel::case1, CaseLabel::case2, CaseLabel::case3a,
                                     CaseLabel::case3b, CaseLabel::none})
                std::cout << case_label_name(label) << ','
                          << to_decimal(h.counts[static_cast<std::size_t>(label)]) << '\n';
            std::cout << "k_powered_total," << to_decimal(h.k_powered_total) << '\n';
        }
    });

    auto* b2_cmd = app.add_subcommand(
        "verify-b2", "Scan for k-powered n with b1^2 <= z and b2 = 1 (expected none)");
    b2_cmd->add_option("--x", arg_x)->required();
    b2_cmd->add_option("--y", arg_y)->required();
    b2_cmd->add_option("--k", arg_k, "Threshold k as p/q")->required();
    b2_cmd->add_option("--z", arg_z, "Split point z (default floor(y^((k-1)/k)))");
    add_common(b2_cmd, opts);
    b2_cmd->callback([&] {
        const auto iv = interval();
        const auto k = PoweredThreshold::parse(arg_k);
        const Natural z = arg_z.empty() ? default_z(iv.y, k) : parse_natural(arg_z);
        LabConfig cfg;
        cfg.sieve = opts.sieve();
        const auto bad = verify_b2_claim(iv, k, z, cfg);
        if (opts.output == "json")
            emit_json(counterexamples_to_json(iv, k, z, bad));
        else
            std::cout << values_csv(bad);
    });

    auto* triple_cmd = app.add_subcommand(
        "abc-triple", "Reduced identity triple (a, b, c) with its gcd structure D");
    triple_cmd->add_option("--n", arg_n)->required();
    triple_cmd->add_option("--d", arg_d)->required();
    add_common(triple_cmd, opts);
    triple_cmd->callback([&] {
        const auto t = build_abc_triple(parse_natural(arg_n), parse_natural(arg_d));
        if (opts.output == "json") {
            emit_json(triple_to_json(t));
        } else {
            std::cout << "n,d,t,n_red,d_red,D,e2,e3,a,b,c,quality\n"
                      << to_decimal(t.n) << ',' << to_decimal(t.d) << ',' << to_decimal(t.t)
                      << ',' << to_decimal(t.n_red) << ',' << to_decimal(t.d_red) << ','
                      << to_decimal(t.D) << ',' << t.e2 << ',' << t.e3 << ',' << to_decimal(t.a)
                      << ',' << to_decimal(t.b) << ',' << to_decimal(t.c) << ','
                      << double_repr(t.quality) << '\n';
        }
    });

    auto* scan_cmd = app.add_subcommand(
        "abc-scan", "Exhaustive D-structure check over coprime 2d' < n' <= nmax");
    scan_cmd->add_option("--nmax", arg_nmax)->capture_default_str();
    add_common(scan_cmd, opts);
    scan_cmd->callback([&] {
        const auto violations = scan_d_structure(arg_nmax, opts.threads);
        if (opts.output == "json")
            emit_json(violations_to_json(arg_nmax, violations));
        else
            std::cout << violations_csv(violations);
    });

    auto* ap_cmd = app.add_subcommand(
        "ap-search", "Maximal arithmetic runs of length >= L among powerful/k-powered numbers");
    ap_cmd->add_option("--x", arg_x)->required();
    ap_cmd->add_option("--y", arg_y)->required();
    ap_cmd->add_option("--pred", arg_pred, "Solution-set predicate")
        ->check(CLI::IsMember({"powerful", "kpowered"}))
        ->capture_default_str();
    ap_cmd->add_option("--k", arg_k, "Threshold k (kpowered only)");
    ap_cmd->add_option("--L", arg_len, "Minimum run length")->check(CLI::Range(std::size_t{3}, std::size_t{64}));
    add_common(ap_cmd, opts);
    ap_cmd->callback([&] {
        const auto iv = interval();
        const bool kpow = arg_pred == "kpowered";
        std::optional<PoweredThreshold> k;
        if (kpow) k = PoweredThreshold::parse(arg_k);
        const auto ws = find_ap_powered(
            iv, kpow ? APPredicate::k_powered : APPredicate::powerful, k, arg_len, opts.sieve());
        if (opts.output == "json")
            emit_json(witnesses_to_json(iv, arg_pred, arg_len, ws));
        else
            std::cout << witnesses_csv(ws);
    });

    auto* rk_cmd = app.add_subcommand(
        "rk", "Largest subset of {1..N} with no non-trivial k-term progression");
    rk_cmd->add_option("--N", arg_bigN)->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 24));
    rk_cmd->add_option("--k", arg_rk_k)->required()->check(CLI::Range(3u, 64u));
    rk_cmd->add_option("--method", arg_method, "exact, greedy, or auto")
        ->check(CLI::IsMember({"exact", "greedy", "auto"}))
        ->capture_default_str();
    rk_cmd->add_option("--exact-cap", arg_exact_cap,
                       "Override the exact-search cap for this k (0 = default)");
    add_common(rk_cmd, opts);
    rk_cmd->callback([&] {
        RkCaps caps;
        if (arg_exact_cap > 0) caps = RkCaps{arg_exact_cap, arg_exact_cap, arg_exact_cap};
        APFreeResult r;
        if (arg_method == "greedy" ||
            (arg_method == "auto" && arg_bigN > caps.for_k(arg_rk_k)))
            r = rk_greedy(arg_bigN, arg_rk_k);
        else
            r = rk_exact(arg_bigN, arg_rk_k, caps);
        if (opts.output == "json")
            emit_json(apfree_to_json(r));
        else
            std::cout << apfree_csv(r);
    });

    auto* bound_cmd = app.add_subcommand("bound", "Evaluate a progression-density bound shape");
    bound_cmd->add_option("--form", arg_form, "gowers, r3_exp, gt4, or lss")->required();
    bound_cmd->add_option("--N", arg_boundN)->required();
    bound_cmd->add_option("--const", arg_consts, "Constant NAME=VALUE (e.g. k=3, c=1, c_k=1)");
    add_common(bound_cmd, opts);
    bound_cmd->callback([&] {
        const auto form = parse_bound_form(arg_form);
        const auto constants = parse_constants(arg_consts);
        const double value = bound_eval(arg_boundN, form, constants);
        if (opts.output == "json") {
            emit_json(bound_to_json(arg_form, arg_boundN, constants, value));
        } else {
            std::string consts;
            for (const auto& [name, v] : constants) {
                if (!consts.empty()) consts += ';';
                consts += name + '=' + double_repr(v);
            }
            std::cout << "form,N,constants,value\n"
                      << arg_form << ',' << double_repr(arg_boundN) << ',' << csv_escape(consts)
                      << ',' << double_repr(value) << '\n';
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParameterError& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return 2;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return 3;
    } catch (const std::bad_alloc&) {
        std::cerr << "resource error: out of memory\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
