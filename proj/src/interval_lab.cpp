#include "powlab/interval_lab.hpp"

#include "powlab/factor.hpp"

#include <cmath>
#include <limits>

namespace powlab {

namespace {

using Clock = std::chrono::steady_clock;

double get_constant(const LabConfig& cfg, const std::string& name, double fallback) {
    const auto it = cfg.constants.find(name);
    return it == cfg.constants.end() ? fallback : it->second;
}

double as_double(const Natural& n) {
    if (n == 0) return 0.0;
    return std::exp(log_natural(n));
}

// Largest prime of f whose exponent satisfies match; nullopt when no entry
// does (the vacuous case: the smoothness condition then holds trivially).
template <typename ExpPred>
std::optional<Natural> max_prime_where(const Factorization& f, ExpPred match) {
    std::optional<Natural> best;
    for (const auto& e : f.entries())
        if (match(e.exponent)) best = e.prime;  // entries ascend, last match wins
    return best;
}

void require_k_above_one(const PoweredThreshold& k) {
    if (k.num() <= k.den()) throw ParameterError("k must be > 1");
}

CountReport finish_report(const Interval& iv, ParamList params, Natural count,
                          std::string bound_form, std::optional<double> bound_value,
                          Clock::time_point started) {
    CountReport report;
    report.interval = iv;
    report.params = std::move(params);
    report.count = std::move(count);
    report.bound_form = std::move(bound_form);
    report.bound_value = bound_value;
    if (bound_value && *bound_value > 0.0)
        report.ratio = as_double(report.count) / *bound_value;
    report.elapsed = Clock::now() - started;
    return report;
}

}  // namespace

Natural default_z(const Natural& y, const PoweredThreshold& k) {
    require_k_above_one(k);
    return floor_rational_power(y, k.num() - k.den(), k.num());
}

CountReport count_t1(const Interval& iv, const PoweredThreshold& k, const Rational& delta,
                     const LabConfig& cfg) {
    const auto started = Clock::now();
    require_k_above_one(k);
    if (delta.num() >= delta.den() && delta.num() != 0)
        throw ParameterError("delta must lie in [0, 1)");

    // p <= y^(1-delta)  <=>  p^dd <= y^(dd-dn)
    const std::uint64_t dd = static_cast<std::uint64_t>(delta.den());
    const std::uint64_t dn = static_cast<std::uint64_t>(delta.num());
    const Natural cut = ipow(iv.y, dd - dn);

    const Natural count =
        count_matching(iv, cfg.sieve, [&](const Natural&, const Factorization& f) {
            if (!is_k_powered(f, k)) return false;
            const auto p = max_prime_where(f, [](unsigned e) { return e >= 2; });
            return !p || ipow(*p, dd) <= cut;
        });

    const double y = as_double(iv.y);
    const double kv = k.value();
    const double c = get_constant(cfg, "C", 1.0);
    const double bound =
        c * (std::pow(y, (3.0 * kv + 1.0) / (4.0 * kv)) +
             std::pow(y, 1.0 - delta.value()) / std::log(y + 1.0));

    ParamList params{{"k", k}, {"delta", delta}, {"C", c}};
    return finish_report(iv, std::move(params), count,
                         "y^((3k+1)/(4k)) + y^(1-delta)/log(y+1)", bound, started);
}

CountReport count_t2(const Interval& iv, const PoweredThreshold& k, const Natural& w,
                     const LabConfig& cfg) {
    const auto started = Clock::now();
    require_k_above_one(k);
    if (w < 2 || w > iv.y) throw ParameterError("w must satisfy 2 <= w <= y");

    const Natural count =
        count_matching(iv, cfg.sieve, [&](const Natural&, const Factorization& f) {
            if (!is_k_powered(f, k)) return false;
            const auto p = max_prime_where(f, [](unsigned e) { return e == 1; });
            return !p || *p <= w;
        });

    const double y = as_double(iv.y);
    const double lw = log_natural(w);
    const double ly = std::log(y);
    const double c = get_constant(cfg, "C", 1.0);
    const double bound =
        c * (y * lw / ly + y * std::exp(-ly / (3.0 * lw)) + std::pow(y, 11.0 / 12.0));

    ParamList params{{"k", k}, {"w", w}, {"C", c}};
    return finish_report(iv, std::move(params), count,
                         "y*log(w)/log(y) + y*exp(-log(y)/(3*log(w))) + y^(11/12)", bound,
                         started);
}

CountReport count_powered(const Interval& iv, const PoweredThreshold& k, const LabConfig& cfg,
                          PoweredBoundForm form) {
    const auto started = Clock::now();
    require_k_above_one(k);

    const Natural count =
        count_matching(iv, cfg.sieve, [&](const Natural&, const Factorization& f) {
            return is_k_powered(f, k);
        });

    const double y = as_double(iv.y);
    ParamList params{{"k", k}};
    std::optional<double> bound;
    std::string bound_form;
    if (form == PoweredBoundForm::loglog_power) {
        const double big_c = get_constant(cfg, "C", 1.0);
        const double small_c = get_constant(cfg, "c", 1.0);
        params.emplace_back("C", big_c);
        params.emplace_back("c", small_c);
        bound_form = "y/exp(C*(loglog y)^c)";
        if (iv.y >= 3) bound = y / std::exp(big_c * std::pow(std::log(std::log(y)), small_c));
    } else {
        const double ck = get_constant(cfg, "c_k", 1.0);
        params.emplace_back("c_k", ck);
        bound_form = "y/exp((c_k*log y)^0.09)";
        bound = y / std::exp(std::pow(ck * std::log(y), 0.09));
    }
    return finish_report(iv, std::move(params), count, std::move(bound_form), bound, started);
}

CountReport count_smooth_powerful(const Interval& iv, const LabConfig& cfg) {
    const auto started = Clock::now();
    if (iv.y < 2) throw ParameterError("count_smooth_powerful: requires y >= 2");

    const Natural count =
        count_matching(iv, cfg.sieve, [&](const Natural&, const Factorization& f) {
            if (!is_powerful(f)) return false;
            return f.is_one() || f.entries().back().prime * f.entries().back().prime <= iv.y;
        });

    const double y = as_double(iv.y);
    const double c = get_constant(cfg, "C", 1.0);
    const double bound = c * std::pow(y, 11.0 / 12.0);
    ParamList params{{"C", c}};
    return finish_report(iv, std::move(params), count, "y^(11/12)", bound, started);
}

CountReport count_verysmooth(const Interval& iv, const LabConfig& cfg) {
    const auto started = Clock::now();
    if (iv.y < 2) throw ParameterError("count_verysmooth: requires y >= 2");

    // T = log(y+1) loglog(y+2), evaluated once; the integer threshold
    // floor(T) makes the count reproducible bit-exactly.
    const double t = log_natural(iv.y + 1) * std::log(log_natural(iv.y + 2));
    const Natural threshold(static_cast<std::uint64_t>(std::max(0.0, std::floor(t))));

    const Natural count =
        count_matching(iv, cfg.sieve, [&](const Natural&, const Factorization& f) {
            const auto p = max_prime_where(f, [](unsigned e) { return e == 1; });
            return !p || *p <= threshold;
        });

    const double y = as_double(iv.y);
    const double c = get_constant(cfg, "C", 1.0);
    const double bound = c * y * std::log(log_natural(iv.y + 2)) / log_natural(iv.y + 2);
    ParamList params{{"threshold_floor", threshold}, {"C", c}};
    return finish_report(iv, std::move(params), count, "y*loglog(y+2)/log(y+2)", bound, started);
}

CountReport count_smooth_divisor(const Interval& iv, const Rational& alpha, const Natural& w,
                                 const LabConfig& cfg) {
    const auto started = Clock::now();
    if (iv.y < 2) throw ParameterError("count_smooth_divisor: requires y >= 2");
    if (w < 2) throw ParameterError("count_smooth_divisor: requires w >= 2");
    if (alpha.num() < 1 || alpha.num() > alpha.den())
        throw ParameterError("alpha must lie in (0, 1]");

    // smooth_part(n, w) > y^alpha  <=>  smooth_part^q > y^p for alpha = p/q
    const std::uint64_t p = static_cast<std::uint64_t>(alpha.num());
    const std::uint64_t q = static_cast<std::uint64_t>(alpha.den());
    const Natural cut = ipow(iv.y, p);

    const Natural count =
        count_matching(iv, cfg.sieve, [&](const Natural&, const Factorization& f) {
            return ipow(smooth_part(f, w), q) > cut;
        });

    const double y = as_double(iv.y);
    const double a = alpha.value();
    const double c = get_constant(cfg, "C", 1.0);
    const double bound =
        c * y * (std::exp(-a * std::log(y) / log_natural(w)) + std::pow(y, -a / 3.0));
    ParamList params{{"alpha", alpha}, {"w", w}, {"C", c}};
    return finish_report(iv, std::move(params), count,
                         "y*(exp(-alpha*log(y)/log(w)) + y^(-alpha/3))", bound, started);
}

CountReport count_rough_report(const Interval& iv, const LabConfig& cfg) {
    const auto started = Clock::now();
    if (iv.y < 2) throw ParameterError("count_rough_report: requires y >= 2");
    const Natural count = count_rough(iv, cfg.sieve);
    const double y = as_double(iv.y);
    const double c = get_constant(cfg, "C", 1.0);
    const double bound = c * 2.0 * y / std::log(y);
    ParamList params{{"C", c}};
    return finish_report(iv, std::move(params), count, "2y/log(y)", bound, started);
}

std::string case_label_name(CaseLabel label) {
    switch (label) {
        case CaseLabel::case1: return "case1";
        case CaseLabel::case2: return "case2";
        case CaseLabel::case3a: return "case3a";
        case CaseLabel::case3b: return "case3b";
        case CaseLabel::none: return "none";
    }
    return "none";
}

namespace {

struct BSplit {
    Natural b1 = 1;
    Natural b2 = 1;
    std::optional<Natural> b2_min_prime;  // smallest prime of b2 when b2 > 1
};

// b = b1 b2 with b1 the longest ascending prefix of prime powers <= z.
BSplit split_b(const Factorization& f, const Natural& z) {
    BSplit s;
    bool prefix = true;
    for (const auto& e : f.entries()) {
        if (e.exponent < 2) continue;
        const Natural pe = ipow(e.prime, e.exponent);
        if (prefix && s.b1 * pe <= z) {
            s.b1 *= pe;
        } else {
            prefix = false;
            s.b2 *= pe;
            if (!s.b2_min_prime) s.b2_min_prime = e.prime;
        }
    }
    return s;
}

CaseLabel classify(const BSplit& s, const Natural& y, const Natural& z) {
    if (s.b1 * s.b1 > z) return CaseLabel::case1;
    if (s.b2 == 1) return CaseLabel::none;
    const Natural& pm = *s.b2_min_prime;
    if (pm * pm <= z) return CaseLabel::case2;
    if (pm * pm <= y) return CaseLabel::case3a;
    return CaseLabel::case3b;
}

}  // namespace

CaseDecomposition decompose_case(const Natural& n, const Interval& iv, const PoweredThreshold& k,
                                 const Natural& z, const Rational& delta) {
    (void)k;
    (void)delta;
    if (z < 1) throw ParameterError("decompose_case: z must be >= 1");
    if (n <= iv.x || n > iv.x + iv.y)
        throw ParameterError("decompose_case: n must lie in (x, x+y]");

    const Factorization f = factor(n);
    CaseDecomposition d;
    d.n = n;
    d.a = squarefree_part(f);
    d.b = powerful_part(f);

    // a1: longest ascending prefix of a's primes with a1 <= y/z (a1*z <= y).
    d.a1 = 1;
    bool prefix = true;
    for (const auto& e : f.entries()) {
        if (e.exponent != 1) continue;
        if (prefix && d.a1 * e.prime * z <= iv.y)
            d.a1 *= e.prime;
        else
            prefix = false;
    }
    d.a2 = d.a / d.a1;

    const BSplit s = split_b(f, z);
    d.b1 = s.b1;
    d.b2 = s.b2;
    d.label = classify(s, iv.y, z);
    return d;
}

std::vector<Natural> verify_b2_claim(const Interval& iv, const PoweredThreshold& k,
                                     const Natural& z, const LabConfig& cfg) {
    require_k_above_one(k);
    if (z < 1) throw ParameterError("verify_b2_claim: z must be >= 1");
    if (iv.y > iv.x) throw ParameterError("verify_b2_claim: requires y <= x");
    if (!pow_leq(z, k.num(), iv.y, k.num() - k.den()))
        throw ParameterError("verify_b2_claim: requires z^k <= y^(k-1)");

    return collect_matching(iv, cfg.sieve, [&](const Natural&, const Factorization& f) {
        if (!is_k_powered(f, k)) return false;
        const BSplit s = split_b(f, z);
        return s.b1 * s.b1 <= z && s.b2 == 1;
    });
}

CaseHistogram case_histogram(const Interval& iv, const PoweredThreshold& k, const Natural& z,
                             const Rational& delta, const LabConfig& cfg) {
    (void)delta;
    require_k_above_one(k);
    if (z < 1) throw ParameterError("case_histogram: z must be >= 1");

    const std::size_t seg = cfg.sieve.segment_size;
    const std::size_t num_segments = static_cast<std::size_t>(
        (iv.y.convert_to<std::uint64_t>() + seg - 1) / seg);
    std::vector<std::array<std::uint64_t, 5>> slots(num_segments);
    scan_factored(iv, cfg.sieve,
                  [&](std::size_t s, const Natural&, std::vector<Factorization>&& fs) {
                      auto& bucket = slots[s];
                      bucket.fill(0);
                      for (const auto& f : fs) {
                          if (!is_k_powered(f, k)) continue;
                          ++bucket[static_cast<std::size_t>(classify(split_b(f, z), iv.y, z))];
                      }
                  });

    CaseHistogram h;
    h.interval = iv;
    h.z = z;
    h.k_powered_total = 0;
    for (const auto& bucket : slots) {
        for (std::size_t i = 0; i < 5; ++i) {
            h.counts[i] += bucket[i];
            h.k_powered_total += bucket[i];
        }
    }
    return h;
}

}  // namespace powlab
