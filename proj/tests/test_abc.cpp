#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "powlab/abc_ap.hpp"
#include "powlab/factor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

using namespace powlab;

namespace {

// Exhaustive subset maximum, no pruning; independent of rk_exact's search.
std::uint64_t rk_oracle(unsigned N, unsigned k) {
    std::uint64_t best = 0;
    for (std::uint64_t mask = 0; mask < (1ull << N); ++mask) {
        bool ok = true;
        for (unsigned d = 1; ok && (k - 1) * d < N; ++d) {
            std::uint64_t m = mask;
            for (unsigned i = 1; i < k && m != 0; ++i) m &= mask >> (i * d);
            if (m != 0) ok = false;
        }
        if (ok) best = std::max<std::uint64_t>(best, __builtin_popcountll(mask));
    }
    return best;
}

bool has_k_term_ap(const std::vector<std::uint64_t>& values, unsigned k) {
    const std::set<std::uint64_t> index(values.begin(), values.end());
    for (const auto a : values) {
        for (std::uint64_t d = 1;; ++d) {
            if (a + (k - 1) * d > (values.empty() ? 0 : values.back())) break;
            bool all = true;
            for (unsigned i = 1; i < k; ++i)
                if (!index.count(a + i * d)) {
                    all = false;
                    break;
                }
            if (all) return true;
        }
    }
    return false;
}

// Quadratic reference for maximal runs, scanning every (start, step) pair.
std::vector<std::tuple<Natural, Natural, std::size_t>> brute_runs(
    const std::vector<Natural>& sol, std::size_t min_len) {
    std::vector<std::tuple<Natural, Natural, std::size_t>> out;
    const std::set<Natural> index(sol.begin(), sol.end());
    if (sol.empty()) return out;
    for (const auto& start : sol) {
        for (Natural d = 1; start + d <= sol.back(); ++d) {
            if (start > d && index.count(start - d)) continue;
            std::size_t len = 1;
            Natural next = start + d;
            while (index.count(next)) {
                ++len;
                next += d;
            }
            if (len >= min_len) out.emplace_back(start, d, len);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("identity_check frozen examples") {
    const auto a = identity_check(Natural(3), Natural(1));
    CHECK(a.lhs1 == 125);
    CHECK(a.lhs2 == 64);
    CHECK(a.rhs == 189);
    CHECK(a.holds);

    const auto b = identity_check(Natural(2), Natural(1));
    CHECK(b.lhs1 == 0);
    CHECK(b.lhs2 == 48);
    CHECK(b.rhs == 48);
    CHECK(b.holds);

    const auto c = identity_check(Natural(9), Natural(0));
    CHECK(c.lhs1 == 6561);
    CHECK(c.lhs2 == 0);
    CHECK(c.rhs == 6561);
    CHECK(c.holds);

    // signed evaluation when n < 2d
    const auto d = identity_check(Natural(1), Natural(3));
    CHECK(d.lhs1 < 0);
    CHECK(d.holds);
}

TEST_CASE("identity holds on random big inputs") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 2000; ++i) {
        const Natural n = rng() % 1'000'000'000ull + 1;
        const Natural d = rng() % 1'000'000'000ull;
        CHECK(identity_check(n, d).holds);
    }
}

TEST_CASE("build_abc_triple frozen examples") {
    const auto t31 = build_abc_triple(Natural(3), Natural(1));
    CHECK(t31.t == 1);
    CHECK(t31.D == 1);
    CHECK(t31.a == 125);
    CHECK(t31.b == 64);
    CHECK(t31.c == 189);
    CHECK(t31.quality == doctest::Approx(std::log(189.0) / std::log(210.0)).epsilon(1e-12));
    CHECK(t31.quality == doctest::Approx(0.98029).epsilon(1e-4));

    const auto t41 = build_abc_triple(Natural(4), Natural(1));
    CHECK(t41.D == 16);
    CHECK(t41.e2 == 4);
    CHECK(t41.e3 == 0);
    CHECK(t41.a == 27);
    CHECK(t41.b == 5);
    CHECK(t41.c == 32);
    CHECK(t41.quality == doctest::Approx(1.01896).epsilon(1e-4));

    const auto t62 = build_abc_triple(Natural(6), Natural(2));
    CHECK(t62.t == 2);
    CHECK(t62.n_red == 3);
    CHECK(t62.d_red == 1);
    CHECK(t62.a == 125);
    CHECK(t62.b == 64);
    CHECK(t62.c == 189);
}

TEST_CASE("build_abc_triple validates inputs") {
    CHECK_THROWS_AS(build_abc_triple(Natural(4), Natural(0)), ParameterError);
    CHECK_THROWS_AS(build_abc_triple(Natural(4), Natural(2)), ParameterError);
    CHECK_THROWS_AS(build_abc_triple(Natural(3), Natural(2)), ParameterError);
}

TEST_CASE("build_abc_triple is scale invariant") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t d = rng() % 50 + 1;
        const std::uint64_t n = 2 * d + 1 + rng() % 500;
        const std::uint64_t m = rng() % 20 + 1;
        const auto base = build_abc_triple(Natural(n), Natural(d));
        const auto scaled = build_abc_triple(Natural(n) * m, Natural(d) * m);
        CHECK(base.a == scaled.a);
        CHECK(base.b == scaled.b);
        CHECK(base.c == scaled.c);
        CHECK(base.D == scaled.D);
    }
}

TEST_CASE("abc_quality") {
    CHECK(abc_quality(Natural(1), Natural(8), Natural(9)) ==
          doctest::Approx(std::log(9.0) / std::log(6.0)).epsilon(1e-12));
    CHECK(abc_quality(Natural(1), Natural(8), Natural(9)) ==
          doctest::Approx(1.22629).epsilon(1e-4));
    CHECK(abc_quality(Natural(1), Natural(1), Natural(2)) == doctest::Approx(1.0));
    CHECK(abc_quality(Natural(27), Natural(5), Natural(32)) ==
          doctest::Approx(1.01896).epsilon(1e-4));
    CHECK_THROWS_AS(abc_quality(Natural(2), Natural(2), Natural(4)), ParameterError);
    CHECK_THROWS_AS(abc_quality(Natural(1), Natural(2), Natural(4)), ParameterError);
    CHECK_THROWS_AS(abc_quality(Natural(0), Natural(2), Natural(2)), ParameterError);
}

TEST_CASE("scan_d_structure finds no violations and matches the triple builder") {
    CHECK(scan_d_structure(300).empty());
    CHECK(scan_d_structure(300, 4).empty());
    CHECK(scan_d_structure(2).empty());

    // spot-check the swept quantities against the cpp_int construction
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        const std::uint64_t np = rng() % 1400 + 3;
        const std::uint64_t dp = rng() % ((np - 1) / 2) + 1;
        if (std::gcd(np, dp) != 1) continue;
        const auto t = build_abc_triple(Natural(np), Natural(dp));
        CHECK(t.D == boost::multiprecision::gcd(ipow(Natural(np), 3) * (np + 4 * dp),
                                                16 * ipow(Natural(dp), 3) * (np + dp)));
        CHECK(t.e2 <= 4);
        CHECK(t.e3 <= 1);
    }
}

TEST_CASE("find_ap_powered frozen example and brute-force equality") {
    const auto ws = find_ap_powered(Interval{Natural(0), Natural(300)}, APPredicate::powerful,
                                    std::nullopt, 3);
    const bool has_1_24 = std::any_of(ws.begin(), ws.end(), [](const APWitness& w) {
        return w.start == 1 && w.d == 24 && w.length == 3;
    });
    CHECK(has_1_24);
    for (const auto& w : ws) {
        CHECK(w.length >= 3);
        CHECK(w.terms.size() == w.length);
        CHECK(w.terms[1] - w.terms[0] == w.d);
    }

    const auto sol = enumerate_powerful(Interval{Natural(0), Natural(300)});
    const auto expect = brute_runs(sol, 3);
    REQUIRE(ws.size() == expect.size());
    for (std::size_t i = 0; i < ws.size(); ++i) {
        CHECK(ws[i].start == std::get<0>(expect[i]));
        CHECK(ws[i].d == std::get<1>(expect[i]));
        CHECK(ws[i].length == std::get<2>(expect[i]));
    }
}

TEST_CASE("find_ap_powered corner cases") {
    CHECK(find_ap_powered(Interval{Natural(0), Natural(100)}, APPredicate::powerful,
                          std::nullopt, 7)
              .empty());
    // fewer solutions than L
    CHECK(find_ap_powered(Interval{Natural(48), Natural(2)}, APPredicate::powerful,
                          std::nullopt, 3)
              .empty());
    CHECK_THROWS_AS(find_ap_powered(Interval{Natural(0), Natural(10)}, APPredicate::powerful,
                                    std::nullopt, 2),
                    ParameterError);
    CHECK_THROWS_AS(find_ap_powered(Interval{Natural(0), Natural(10)}, APPredicate::k_powered,
                                    std::nullopt, 3),
                    ParameterError);

    // k-powered predicate route
    const auto ws = find_ap_powered(Interval{Natural(0), Natural(300)}, APPredicate::k_powered,
                                    PoweredThreshold(2, 1), 3);
    CHECK_FALSE(ws.empty());
}

TEST_CASE("threshold_y exact floors") {
    CHECK(threshold_y(Natural(100000000), PoweredThreshold(5, 2)) == 100);
    CHECK(threshold_y(Natural(2), PoweredThreshold(5, 2)) == 1);
    CHECK(threshold_y(Natural("1000000000000"), PoweredThreshold(2, 1)) == 177);
    CHECK_THROWS_AS(threshold_y(Natural(100), PoweredThreshold(5, 4)), ParameterError);
    CHECK_THROWS_AS(threshold_y(Natural(100), PoweredThreshold(6, 5)), ParameterError);
}

TEST_CASE("rk_exact frozen values") {
    CHECK(rk_exact(4, 3).size == 3);   // e.g. {1, 2, 4}
    CHECK(rk_exact(7, 7).size == 6);   // only {1..7} has 7 elements
    CHECK(rk_exact(2, 5).size == 2);   // N < k keeps everything
    CHECK(rk_exact(6, 7).size == 6);
    CHECK(rk_exact(1, 3).size == 1);
    CHECK_THROWS_AS(rk_exact(0, 3), ParameterError);
    CHECK_THROWS_AS(rk_exact(41, 3, RkCaps{}), CapacityError);
    CHECK_THROWS_AS(rk_exact(10, 2), ParameterError);
}

TEST_CASE("rk_exact matches the exhaustive oracle on small N") {
    for (const unsigned k : {3u, 4u, 5u}) {
        for (unsigned N = 1; N <= 14; ++N) {
            const auto r = rk_exact(N, k);
            CHECK(r.size == rk_oracle(N, k));
            CHECK(r.witness.size() == r.size);
            CHECK_FALSE(has_k_term_ap(r.witness, k));
            for (const auto v : r.witness) {
                CHECK(v >= 1);
                CHECK(v <= N);
            }
        }
    }
}

TEST_CASE("rk monotonicity") {
    std::vector<std::uint64_t> r3;
    for (unsigned N = 1; N <= 25; ++N) r3.push_back(rk_exact(N, 3).size);
    for (std::size_t i = 1; i < r3.size(); ++i) {
        CHECK(r3[i] >= r3[i - 1]);
        CHECK(r3[i] <= r3[i - 1] + 1);
    }
    for (unsigned N = 1; N <= 20; ++N)
        CHECK(rk_exact(N, 3).size <= rk_exact(N, 4).size);
}

TEST_CASE("rk_greedy") {
    const auto g = rk_greedy(13, 3);
    CHECK(g.method == "greedy");
    CHECK(g.witness == std::vector<std::uint64_t>{1, 2, 4, 5, 10, 11, 13});
    CHECK_FALSE(has_k_term_ap(g.witness, 3));
    CHECK(g.size <= rk_exact(13, 3).size);

    const auto full = rk_greedy(4, 5);
    CHECK(full.witness == std::vector<std::uint64_t>{1, 2, 3, 4});

    const auto g7 = rk_greedy(20, 7);
    CHECK(g7.size >= 18);
    CHECK_FALSE(has_k_term_ap(g7.witness, 7));
}

TEST_CASE("bound_eval") {
    const double e_e = std::exp(std::exp(1.0));
    CHECK(bound_eval(e_e, BoundForm::lss, {{"c_k", 1.0}}) ==
          doctest::Approx(std::exp(-1.0) * e_e).epsilon(1e-12));

    const double e_512 = std::exp(512.0);
    CHECK(bound_eval(e_512, BoundForm::r3_exp, {{"c", 1.0}}) ==
          doctest::Approx(e_512 * std::exp(-2.0)).epsilon(1e-12));

    // c_3 = 2^(-2^12) underflows, so the gowers factor collapses to 1
    CHECK(bound_eval(1e6, BoundForm::gowers, {{"k", 3.0}}) == doctest::Approx(1e6));

    CHECK(bound_eval(std::exp(2.0), BoundForm::gt4, {{"c", 2.0}}) ==
          doctest::Approx(std::exp(2.0) / 4.0).epsilon(1e-12));

    CHECK_THROWS_AS(bound_eval(1e6, BoundForm::gowers, {}), ParameterError);
    CHECK_THROWS_AS(bound_eval(2.0, BoundForm::lss, {}), ParameterError);
    CHECK_THROWS_AS(bound_eval(1.0, BoundForm::gt4, {}), ParameterError);
    CHECK(parse_bound_form("lss") == BoundForm::lss);
    CHECK_THROWS_AS(parse_bound_form("nope"), ParameterError);
}
