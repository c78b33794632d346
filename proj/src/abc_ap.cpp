#include "powlab/abc_ap.hpp"

#include "powlab/factor.hpp"
#include "powlab/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>
#include <unordered_set>

namespace powlab {

namespace {

using u64 = std::uint64_t;

constexpr u64 kDSweepCap = 40'000;      // keeps the u64 products below 2^63
constexpr std::size_t kApSetCap = 20'000;  // quadratic pair scan stays seconds

}  // namespace

IdentityCheck identity_check(const Natural& n, const Natural& d) {
    IdentityCheck r;
    r.lhs1 = ipow(n + 2 * d, 3) * (n - 2 * d);
    r.lhs2 = 16 * ipow(d, 3) * (n + d);
    r.rhs = ipow(n, 3) * (n + 4 * d);
    r.holds = r.lhs1 + r.lhs2 == r.rhs;
    return r;
}

double abc_quality(const Natural& a, const Natural& b, const Natural& c) {
    if (a < 1 || b < 1) throw ParameterError("abc_quality: requires a, b >= 1");
    if (a + b != c) throw ParameterError("abc_quality: requires a + b = c");
    if (boost::multiprecision::gcd(a, b) != 1) throw ParameterError("abc_quality: requires gcd(a, b) = 1");
    std::set<Natural> primes;
    for (const Natural* v : {&a, &b, &c}) {
        const Factorization f = factor(*v);
        for (const auto& e : f.entries()) primes.insert(e.prime);
    }
    Natural rad = 1;
    for (const auto& p : primes) rad *= p;
    return log_natural(c) / log_natural(rad);
}

AbcTriple build_abc_triple(const Natural& n, const Natural& d) {
    if (d < 1) throw ParameterError("build_abc_triple: d = 0 gives a trivial progression");
    if (n <= 2 * d) throw ParameterError("build_abc_triple: requires n > 2d");

    AbcTriple t;
    t.n = n;
    t.d = d;
    t.t = boost::multiprecision::gcd(n, d);
    t.n_red = n / t.t;
    t.d_red = d / t.t;

    const Natural big_a = ipow(t.n_red, 3) * (t.n_red + 4 * t.d_red);
    const Natural big_b = 16 * ipow(t.d_red, 3) * (t.n_red + t.d_red);
    t.D = boost::multiprecision::gcd(big_a, big_b);

    const unsigned e2 = boost::multiprecision::lsb(t.D);
    Natural rest = t.D >> e2;
    unsigned e3 = 0;
    if (rest % 3 == 0) {
        rest /= 3;
        e3 = 1;
    }
    if (rest != 1 || e2 > 4)
        throw std::logic_error("build_abc_triple: D is not of the form 2^e2 3^e3 with e2 <= 4");
    t.e2 = e2;
    t.e3 = e3;

    const Natural lhs1 = ipow(t.n_red + 2 * t.d_red, 3) * (t.n_red - 2 * t.d_red);
    if (lhs1 % t.D != 0) throw std::logic_error("build_abc_triple: D does not divide the a-part");
    t.a = lhs1 / t.D;
    t.b = big_b / t.D;
    t.c = big_a / t.D;
    if (t.a + t.b != t.c) throw std::logic_error("build_abc_triple: a + b != c");
    if (boost::multiprecision::gcd(t.a, t.b) != 1 || boost::multiprecision::gcd(t.a, t.c) != 1 ||
        boost::multiprecision::gcd(t.b, t.c) != 1)
        throw std::logic_error("build_abc_triple: reduced triple is not pairwise coprime");

    t.quality = abc_quality(t.a, t.b, t.c);
    return t;
}

std::vector<DViolation> scan_d_structure(u64 n_max, unsigned threads) {
    if (n_max > kDSweepCap) throw CapacityError("scan_d_structure: n_max exceeds 40000");
    if (n_max < 3) return {};

    const std::size_t count = static_cast<std::size_t>(n_max - 2);
    std::vector<std::vector<DViolation>> slots(count);
    dispatch_indexed(count, threads, [&](std::size_t idx) {
        const u64 np = idx + 3;
        auto& out = slots[idx];
        for (u64 dp = 1; 2 * dp < np; ++dp) {
            if (std::gcd(np, dp) != 1) continue;
            const u64 big_a = np * np * np * (np + 4 * dp);
            const u64 big_b = 16 * dp * dp * dp * (np + dp);
            const u64 D = std::gcd(big_a, big_b);
            const unsigned e2 = static_cast<unsigned>(std::countr_zero(D));
            u64 rest = D >> e2;
            if (rest % 3 == 0) rest /= 3;
            if (rest != 1 || e2 > 4) {
                out.push_back({np, dp, "D not of the form 2^e2 3^e3 with e2 <= 4, e3 <= 1"});
                continue;
            }
            const u64 s = np + 2 * dp;
            const u64 lhs1 = s * s * s * (np - 2 * dp);
            if (lhs1 % D != 0) {
                out.push_back({np, dp, "D does not divide the a-part"});
                continue;
            }
            const u64 a = lhs1 / D;
            const u64 b = big_b / D;
            const u64 c = big_a / D;
            if (a + b != c) {
                out.push_back({np, dp, "a + b != c after division by D"});
                continue;
            }
            if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1)
                out.push_back({np, dp, "reduced triple not pairwise coprime"});
        }
    });

    std::vector<DViolation> merged;
    for (auto& slot : slots)
        for (auto& v : slot) merged.push_back(std::move(v));
    return merged;
}

namespace {

struct NaturalHash {
    std::size_t operator()(const Natural& n) const {
        return static_cast<std::size_t>((n & std::numeric_limits<u64>::max()).convert_to<u64>());
    }
};

}  // namespace

std::vector<APWitness> find_ap_powered(const Interval& iv, APPredicate pred,
                                       const std::optional<PoweredThreshold>& k,
                                       std::size_t min_len, const SieveConfig& cfg) {
    if (min_len < 3) throw ParameterError("find_ap_powered: requires L >= 3");

    std::vector<Natural> sol;
    if (pred == APPredicate::powerful) {
        sol = enumerate_powerful(iv);
    } else {
        if (!k) throw ParameterError("find_ap_powered: k required for the k-powered predicate");
        sol = enumerate_k_powered(iv, *k, cfg);
    }
    if (sol.size() > kApSetCap)
        throw CapacityError("find_ap_powered: solution set exceeds 20000 elements");

    std::unordered_set<Natural, NaturalHash> index(sol.begin(), sol.end());
    std::vector<APWitness> out;
    for (std::size_t i = 0; i + 1 < sol.size(); ++i) {
        for (std::size_t j = i + 1; j < sol.size(); ++j) {
            const Natural d = sol[j] - sol[i];
            if (sol[i] > d && index.count(sol[i] - d)) continue;  // run starts earlier
            std::size_t len = 2;
            Natural next = sol[j] + d;
            while (index.count(next)) {
                ++len;
                next += d;
            }
            if (len < min_len) continue;
            APWitness w;
            w.start = sol[i];
            w.d = d;
            w.length = len;
            w.terms.reserve(len);
            Natural term = sol[i];
            for (std::size_t t = 0; t < len; ++t) {
                w.terms.push_back(term);
                term += d;
            }
            out.push_back(std::move(w));
        }
    }
    return out;
}

Natural threshold_y(const Natural& x, const PoweredThreshold& k) {
    // exponent (4k-5)/(8k) with k = num/den: (4 num - 5 den) / (8 num)
    if (4 * k.num() <= 5 * k.den()) throw ParameterError("threshold_y: requires k > 5/4");
    const u64 e_num = 4 * k.num() - 5 * k.den();
    const u64 e_den = 8 * k.num();
    return floor_rational_power(x, e_num, e_den);
}

namespace {

// True when adding m to the chosen set closes a k-term progression ending at m.
bool closes_progression(u64 mask, unsigned m, unsigned k) {
    for (unsigned d = 1; (k - 1) * d < m; ++d) {
        bool all = true;
        for (unsigned i = 1; i < k; ++i) {
            const unsigned t = m - i * d;
            if (!(mask >> (t - 1) & 1)) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

struct RkSearch {
    unsigned m = 0;
    unsigned k = 0;
    unsigned target = 0;
    const std::vector<unsigned>* table = nullptr;  // r values for shorter lengths
    u64 found_mask = 0;

    bool dfs(unsigned pos, unsigned count, u64 mask) {
        if (count == target) {
            found_mask = mask;
            return true;
        }
        if (pos > m) return false;
        const unsigned remaining = m - pos + 1;
        const unsigned best_rest = remaining < table->size()
                                       ? std::min(remaining, (*table)[remaining])
                                       : remaining;
        if (count + best_rest < target) return false;
        if (!closes_progression(mask, pos, k) && dfs(pos + 1, count + 1, mask | (1ull << (pos - 1))))
            return true;
        return dfs(pos + 1, count, mask);
    }
};

std::vector<u64> mask_to_list(u64 mask) {
    std::vector<u64> out;
    for (unsigned i = 0; i < 64; ++i)
        if (mask >> i & 1) out.push_back(i + 1);
    return out;
}

}  // namespace

APFreeResult rk_exact(u64 N, unsigned k, const RkCaps& caps) {
    if (k < 3) throw ParameterError("rk_exact: requires k >= 3");
    if (N < 1) throw ParameterError("rk_exact: requires N >= 1");
    if (N > caps.for_k(k)) throw CapacityError("rk_exact: N above exact-search cap");

    // Grow the table r(1), ..., r(N); each step searches for one more element
    // than the previous optimum, using the shorter-length optima as bounds.
    std::vector<unsigned> table{0};
    u64 witness_mask = 0;
    for (unsigned m = 1; m <= N; ++m) {
        RkSearch search;
        search.m = m;
        search.k = k;
        search.target = table[m - 1] + 1;
        search.table = &table;
        if (search.dfs(1, 0, 0)) {
            table.push_back(table[m - 1] + 1);
            witness_mask = search.found_mask;
        } else {
            table.push_back(table[m - 1]);
        }
    }

    APFreeResult r;
    r.N = N;
    r.k = k;
    r.size = table[N];
    r.witness = mask_to_list(witness_mask);
    r.method = "exact";
    return r;
}

APFreeResult rk_greedy(u64 N, unsigned k) {
    if (k < 3) throw ParameterError("rk_greedy: requires k >= 3");

    std::vector<bool> chosen(static_cast<std::size_t>(N) + 1, false);
    std::vector<u64> picked;
    for (u64 m = 1; m <= N; ++m) {
        bool blocked = false;
        for (u64 d = 1; (k - 1) * d < m && !blocked; ++d) {
            bool all = true;
            for (unsigned i = 1; i < k; ++i) {
                if (!chosen[static_cast<std::size_t>(m - i * d)]) {
                    all = false;
                    break;
                }
            }
            blocked = all;
        }
        if (!blocked) {
            chosen[static_cast<std::size_t>(m)] = true;
            picked.push_back(m);
        }
    }

    APFreeResult r;
    r.N = N;
    r.k = k;
    r.size = picked.size();
    r.witness = std::move(picked);
    r.method = "greedy";
    return r;
}

BoundForm parse_bound_form(const std::string& name) {
    if (name == "gowers") return BoundForm::gowers;
    if (name == "r3_exp") return BoundForm::r3_exp;
    if (name == "gt4") return BoundForm::gt4;
    if (name == "lss") return BoundForm::lss;
    throw ParameterError("unknown bound form: " + name);
}

std::string bound_form_name(BoundForm form) {
    switch (form) {
        case BoundForm::gowers: return "gowers";
        case BoundForm::r3_exp: return "r3_exp";
        case BoundForm::gt4: return "gt4";
        case BoundForm::lss: return "lss";
    }
    return "gowers";
}

double bound_eval(double N, BoundForm form, const std::map<std::string, double>& constants) {
    const auto get = [&](const std::string& name, std::optional<double> fallback) {
        const auto it = constants.find(name);
        if (it != constants.end()) return it->second;
        if (fallback) return *fallback;
        throw ParameterError("bound_eval: missing constant " + name);
    };
    switch (form) {
        case BoundForm::gowers: {
            const double k = get("k", std::nullopt);
            if (k < 3) throw ParameterError("bound_eval: gowers requires k >= 3");
            const double ll = std::log(std::log(N));
            if (!(ll > 0)) throw ParameterError("bound_eval: N too small for loglog");
            // c_k = 2^(-2^(k+9)) underflows to 0 for every allowed k, so the
            // (loglog N)^(-c_k) factor evaluates to 1 in double precision.
            const double ck = std::exp2(-std::exp2(k + 9));
            return N * std::pow(ll, -ck);
        }
        case BoundForm::r3_exp: {
            const double c = get("c", 1.0);
            if (!(std::log(N) > 0)) throw ParameterError("bound_eval: N too small for log");
            return N * std::exp(-c * std::pow(std::log(N), 1.0 / 9.0));
        }
        case BoundForm::gt4: {
            const double c = get("c", 1.0);
            if (!(std::log(N) > 0)) throw ParameterError("bound_eval: N too small for log");
            return N * std::pow(std::log(N), -c);
        }
        case BoundForm::lss: {
            const double ck = get("c_k", 1.0);
            const double ll = std::log(std::log(N));
            if (!(ll > 0)) throw ParameterError("bound_eval: N too small for loglog");
            return N * std::exp(-std::pow(ll, ck));
        }
    }
    throw ParameterError("bound_eval: unknown form");
}

}  // namespace powlab
