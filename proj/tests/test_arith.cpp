#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "powlab/factor.hpp"
#include "powlab/factorization.hpp"
#include "powlab/natural.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

using namespace powlab;

namespace {

// Independent trial-division oracle; deliberately naive.
std::vector<std::pair<std::uint64_t, unsigned>> naive_factor(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
    std::vector<std::uint64_t> divs{1};
    for (const auto& [p, e] : naive_factor(n)) {
        const std::size_t base = divs.size();
        std::uint64_t pe = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Factorization fac(std::uint64_t n) {
    return factor(Natural(n));
}

}  // namespace

TEST_CASE("ipow, isqrt, iroot") {
    CHECK(ipow(Natural(2), 10) == 1024);
    CHECK(ipow(Natural(7), 0) == 1);
    CHECK(ipow(Natural(0), 5) == 0);
    CHECK(isqrt(Natural(0)) == 0);
    CHECK(isqrt(Natural(48)) == 6);
    CHECK(isqrt(Natural(49)) == 7);
    CHECK(iroot(Natural(1000), 3) == 10);
    CHECK(iroot(Natural(999), 3) == 9);
    CHECK(iroot(ipow(Natural(12345), 7), 7) == 12345);
    CHECK(iroot(ipow(Natural(12345), 7) - 1, 7) == 12344);
    CHECK_THROWS_AS(iroot(Natural(5), 0), ParameterError);
}

TEST_CASE("pow_leq decides boundary cases exactly") {
    // 6^7 = 279936 <= 648^2 = 419904, but 6^8 > 648^2
    CHECK(pow_leq(Natural(6), 7, Natural(648), 2));
    CHECK_FALSE(pow_leq(Natural(6), 8, Natural(648), 2));
    CHECK(pow_leq(Natural(5), 3, Natural(5), 3));
    CHECK(pow_leq(Natural(1), 1000, Natural(2), 1));
    CHECK_FALSE(pow_leq(Natural(2), 1, Natural(1), 1000));
    // the bit-length shortcut must not misjudge near-equal magnitudes
    CHECK(pow_leq(Natural(1024), 2, Natural(1048576), 1));
    CHECK(pow_leq(Natural(1048576), 1, Natural(1024), 2));
}

TEST_CASE("floor_rational_power") {
    CHECK(floor_rational_power(Natural(1000), 1, 2) == 31);
    CHECK(floor_rational_power(Natural(100000000), 1, 4) == 100);
    CHECK(floor_rational_power(Natural(1000000000000), 3, 16) == 177);
    CHECK(floor_rational_power(Natural(7), 0, 3) == 1);
    CHECK(floor_rational_power(Natural(0), 2, 3) == 0);
    CHECK(floor_rational_power(Natural(1), 5, 7) == 1);
}

TEST_CASE("log_natural tracks std::log and survives huge inputs") {
    CHECK(log_natural(Natural(1)) == 0.0);
    CHECK(log_natural(Natural(648)) == doctest::Approx(std::log(648.0)).epsilon(1e-14));
    const Natural big = ipow(Natural(10), 50);
    CHECK(log_natural(big) == doctest::Approx(50.0 * std::log(10.0)).epsilon(1e-12));
}

TEST_CASE("Rational and PoweredThreshold parsing") {
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse("0") == Rational(0, 1));
    CHECK(Rational::parse("2") == Rational(2, 1));
    CHECK_THROWS_AS(Rational::parse("1/0"), ParameterError);
    CHECK_THROWS_AS(Rational::parse("x"), ParameterError);
    CHECK(PoweredThreshold::parse("7/2").num() == 7);
    CHECK(PoweredThreshold::parse("14/4") == PoweredThreshold(7, 2));
    CHECK(PoweredThreshold::parse("3").den() == 1);
    CHECK_THROWS_AS(PoweredThreshold::parse("1/2"), ParameterError);
    CHECK(PoweredThreshold(3, 2) < PoweredThreshold(2, 1));
}

TEST_CASE("factor matches frozen examples") {
    const auto f360 = fac(360);
    REQUIRE(f360.entries().size() == 3);
    CHECK(f360.entries()[0].prime == 2);
    CHECK(f360.entries()[0].exponent == 3);
    CHECK(f360.entries()[1].prime == 3);
    CHECK(f360.entries()[1].exponent == 2);
    CHECK(f360.entries()[2].prime == 5);
    CHECK(f360.entries()[2].exponent == 1);

    CHECK(fac(1).is_one());

    const auto fp = factor(Natural(1000000007));
    REQUIRE(fp.entries().size() == 1);
    CHECK(fp.entries()[0].prime == 1000000007);
    CHECK(fp.entries()[0].exponent == 1);
    CHECK(is_prime(Natural(1000000007)));

    CHECK_THROWS_AS(factor(Natural(0)), ParameterError);
}

TEST_CASE("factor recomposes random 64-bit inputs and verifies primes") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t n = rng() % 1'000'000'000'000ull + 2;
        const auto f = factor(Natural(n));
        CHECK(f.value() == n);
        CHECK(f.verify_primes());
    }
}

TEST_CASE("factor handles semiprimes past the trial bound") {
    // both primes above 10^6, so the rho path must split the cofactor
    const Natural n = Natural(1000003) * 1000033;
    const auto f = factor(n);
    REQUIRE(f.entries().size() == 2);
    CHECK(f.entries()[0].prime == 1000003);
    CHECK(f.entries()[1].prime == 1000033);
}

TEST_CASE("factor handles inputs beyond 64 bits") {
    const Natural p1 = 1000000007, p2 = 1000000009, p3 = 1000000021;
    const Natural n = p1 * p1 * p2 * p3;
    const auto f = factor(n);
    REQUIRE(f.entries().size() == 3);
    CHECK(f.entries()[0].prime == p1);
    CHECK(f.entries()[0].exponent == 2);
    CHECK(f.entries()[1].prime == p2);
    CHECK(f.entries()[2].prime == p3);
    CHECK(f.value() == n);

    // big prime: Baillie-PSW path
    const Natural big_prime = parse_natural("170141183460469231731687303715884105727");  // 2^127-1
    CHECK(is_prime(big_prime));
    CHECK_FALSE(is_prime(big_prime + 2));
}

TEST_CASE("kernel, squarefree part, powerful part") {
    CHECK(kernel(fac(648)) == 6);
    CHECK(kernel(fac(1)) == 1);
    CHECK(kernel(fac(360)) == 30);

    CHECK(squarefree_part(fac(72)) == 1);
    CHECK(squarefree_part(fac(360)) == 5);
    CHECK(squarefree_part(fac(30)) == 30);

    CHECK(powerful_part(fac(360)) == 72);
    CHECK(powerful_part(fac(30)) == 1);
    CHECK(powerful_part(fac(648)) == 648);
}

TEST_CASE("largest and smallest prime factors with the n = 1 conventions") {
    CHECK(largest_prime_factor(fac(360)) == 5);
    CHECK(smallest_prime_factor(fac(360)).value() == 2);
    CHECK(largest_prime_factor(fac(1)) == 1);
    CHECK_FALSE(smallest_prime_factor(fac(1)).has_value());
    CHECK(smallest_prime_exceeds(fac(1), Natural(1) << 100));
    CHECK(largest_prime_factor(fac(649)) == 59);
}

TEST_CASE("powerful / k-full / squarefree predicates") {
    CHECK(is_powerful(fac(72)));
    CHECK(is_k_full(fac(648), 3));
    CHECK_FALSE(is_k_full(fac(72), 3));
    CHECK(is_squarefree(fac(30)));
    CHECK_FALSE(is_squarefree(fac(72)));
    CHECK(is_powerful(fac(1)));
    CHECK(is_k_full(fac(1), 7));
    CHECK(is_squarefree(fac(1)));
}

TEST_CASE("is_k_powered exact comparisons") {
    CHECK(is_k_powered(fac(648), PoweredThreshold(7, 2)));
    CHECK_FALSE(is_k_powered(fac(648), PoweredThreshold(4, 1)));
    CHECK(is_k_powered(fac(1), PoweredThreshold(1000, 1)));
    CHECK(is_k_powered(fac(8), PoweredThreshold(3, 1)));
    CHECK_FALSE(is_k_powered(fac(8), PoweredThreshold(4, 1)));
}

TEST_CASE("powered_exponent") {
    CHECK(powered_exponent(fac(648)) == doctest::Approx(3.613147).epsilon(1e-6));
    CHECK(powered_exponent(fac(648)) ==
          doctest::Approx(std::log(648.0) / std::log(6.0)).epsilon(1e-14));
    CHECK(powered_exponent(fac(2)) == doctest::Approx(1.0));
    CHECK(powered_exponent(fac(8)) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK_THROWS_AS(powered_exponent(fac(1)), ParameterError);
}

TEST_CASE("is_k_powered agrees with powered_exponent away from the boundary") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        const std::uint64_t n = rng() % 100000 + 2;
        const auto f = fac(n);
        const double expo = powered_exponent(f);
        for (const auto& k : {PoweredThreshold(3, 2), PoweredThreshold(2, 1),
                              PoweredThreshold(7, 2), PoweredThreshold(3, 1)}) {
            if (std::abs(expo - k.value()) <= 1e-9) continue;
            CHECK(is_k_powered(f, k) == (expo >= k.value()));
        }
    }
}

TEST_CASE("smooth parts") {
    CHECK(smooth_part(fac(720), Natural(3)) == 144);
    CHECK(smooth_part(fac(720), Natural(5)) == 720);
    CHECK(smooth_part(fac(7), Natural(2)) == 1);
    CHECK(is_w_smooth(fac(720), Natural(5)));
    CHECK_FALSE(is_w_smooth(fac(720), Natural(3)));
    CHECK(is_w_smooth(fac(1), Natural(1)));
}

TEST_CASE("smooth_part is the largest smooth divisor (divisor-enumeration oracle)") {
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        const auto f = fac(n);
        for (const std::uint64_t w : {10ull, 100ull}) {
            std::uint64_t best = 1;
            for (const std::uint64_t d : divisors_of(n)) {
                const auto df = naive_factor(d);
                const bool smooth = df.empty() || df.back().first <= w;
                if (smooth) best = std::max(best, d);
            }
            CHECK(smooth_part(f, Natural(w)) == best);
        }
    }
}

TEST_CASE("squarefree/powerful decomposition invariants") {
    for (std::uint64_t n = 1; n <= 5000; ++n) {
        const auto f = fac(n);
        const Natural q = squarefree_part(f);
        const Natural b = powerful_part(f);
        CHECK(q * b == n);
        CHECK(boost::multiprecision::gcd(q, b) == 1);
        CHECK(is_squarefree(factor(q)));
        CHECK(is_powerful(factor(b)));
    }
}

TEST_CASE("kernel multiplicativity and power stability") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const std::uint64_t a = rng() % 5000 + 1;
        const std::uint64_t b = rng() % 5000 + 1;
        const Natural ka = kernel(fac(a));
        const Natural kb = kernel(fac(b));
        const Natural kab = kernel(factor(Natural(a) * b));
        CHECK(ka <= a);
        CHECK(kab <= ka * kb);
        CHECK(ka <= kab);  // kappa(a) <= kappa(ab)
        if (std::gcd(a, b) == 1) CHECK(kab == ka * kb);
        CHECK(kernel(factor(ipow(Natural(a), 3))) == ka);
    }
}

TEST_CASE("k-full implies k-powered") {
    for (std::uint64_t n = 1; n <= 5000; ++n) {
        const auto f = fac(n);
        for (unsigned k = 2; k <= 4; ++k) {
            if (is_k_full(f, k)) CHECK(is_k_powered(f, PoweredThreshold(k, 1)));
        }
    }
}

TEST_CASE("is_k_powered is monotone in k") {
    const std::vector<PoweredThreshold> ks{PoweredThreshold(1, 1), PoweredThreshold(3, 2),
                                           PoweredThreshold(2, 1), PoweredThreshold(5, 2),
                                           PoweredThreshold(3, 1)};
    for (std::uint64_t n = 1; n <= 3000; ++n) {
        const auto f = fac(n);
        bool prev = true;
        for (std::size_t i = 0; i < ks.size(); ++i) {
            const bool cur = is_k_powered(f, ks[i]);
            if (!prev) CHECK_FALSE(cur);
            prev = cur;
        }
    }
}

TEST_CASE("Factorization construction validates its invariants") {
    CHECK_THROWS_AS(Factorization::from_entries({{Natural(4), 1}, {Natural(3), 1}}),
                    ParameterError);
    CHECK_THROWS_AS(Factorization::from_entries({{Natural(3), 0}}), ParameterError);
    CHECK_THROWS_AS(Factorization::from_entries({{Natural(1), 2}}), ParameterError);
    const auto f = Factorization::from_entries({{Natural(2), 3}, {Natural(5), 1}});
    CHECK(f.value() == 40);
}
