#include "powlab/factor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <vector>

namespace powlab {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 splitmix64(u64& state) {
    u64 z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 isqrt_u64(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    if (r > 0xFFFFFFFFull) r = 0xFFFFFFFFull;
    while (r > 0 && r * r > n) --r;
    while (r + 1 <= 0xFFFFFFFFull && (r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool mr_witness_u64(u64 n, u64 a, u64 d, int s) {
    a %= n;
    if (a == 0) return true;
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Deterministic for all n < 2^64 (Sinclair's 7-base set).
bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        if (!mr_witness_u64(n, a, d, s)) return false;
    }
    return true;
}

// Brent's cycle variant; n must be odd, composite and > 1.
u64 pollard_brent_u64(u64 n, u64& state) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        const u64 c = splitmix64(state) % (n - 1) + 1;
        u64 y = splitmix64(state) % (n - 1) + 1;
        const u64 m = 128;
        u64 g = 1, r = 1, q = 1, x = 0, ys = 0;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            for (u64 k = 0; k < r && g == 1; k += m) {
                ys = y;
                const u64 steps = std::min(m, r - k);
                for (u64 i = 0; i < steps; ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (g != n) return g;
    }
    throw std::logic_error("pollard_brent_u64: failed to split composite");
}

void split_u64(u64 m, std::map<u64, unsigned>& acc, u64& state) {
    if (m == 1) return;
    if (is_prime_u64(m)) {
        ++acc[m];
        return;
    }
    while ((m & 1) == 0) {
        ++acc[2];
        m >>= 1;
    }
    if (m == 1) return;
    if (is_prime_u64(m)) {
        ++acc[m];
        return;
    }
    const u64 r = isqrt_u64(m);
    if (r * r == m) {
        split_u64(r, acc, state);
        split_u64(r, acc, state);
        return;
    }
    const u64 f = pollard_brent_u64(m, state);
    split_u64(f, acc, state);
    split_u64(m / f, acc, state);
}

// ---- arbitrary-precision primality (Baillie-PSW) ----

int jacobi(Natural a, Natural n) {
    // n odd, positive
    a %= n;
    int result = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            const unsigned r = (n & 7).convert_to<unsigned>();
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

bool mr_witness_big(const Natural& n, const Natural& a, const Natural& d, unsigned s) {
    Natural x = boost::multiprecision::powm(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

// Strong Lucas probable-prime test with Selfridge's parameter choice.
bool strong_lucas_prp(const Natural& n) {
    // Find D in 5, -7, 9, -11, ... with Jacobi(D, n) = -1.
    long long d_abs = 5;
    int sign = 1;
    Natural d_val;
    while (true) {
        d_val = sign > 0 ? Natural(d_abs) : n - (Natural(d_abs) % n);
        const int j = jacobi(d_val, n);
        if (j == -1) break;
        if (j == 0 && Natural(d_abs) != n) return false;
        d_abs += 2;
        sign = -sign;
        if (d_abs > 1'000'000) throw std::logic_error("strong_lucas_prp: no suitable D");
    }
    const long long d_signed = sign > 0 ? d_abs : -d_abs;
    // P = 1, Q = (1 - D) / 4
    const long long q_signed = (1 - d_signed) / 4;
    const Natural D = d_val % n;
    const Natural Q = q_signed >= 0 ? Natural(q_signed) % n : n - (Natural(-q_signed) % n);

    Natural d = n + 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }

    const auto halve = [&](Natural v) {
        if ((v & 1) != 0) v += n;
        return (v >> 1) % n;
    };

    // Compute U_d, V_d, Q^d by binary ladder from the top bit.
    Natural u = 1, v = 1, qk = Q % n;  // U_1, V_1 (P = 1), Q^1
    const unsigned top = boost::multiprecision::msb(d);
    for (int i = static_cast<int>(top) - 1; i >= 0; --i) {
        // double: (U, V, Q^k) -> (U*V, V^2 - 2 Q^k, Q^2k)
        u = u * v % n;
        v = (v * v + 2 * n * n - 2 * qk) % n;
        qk = qk * qk % n;
        if (boost::multiprecision::bit_test(d, static_cast<unsigned>(i))) {
            // increment: U' = (U + V)/2, V' = (D U + V)/2 (P = 1), Q^k -> Q^(k+1)
            const Natural u_next = halve(u + v);
            const Natural v_next = halve(D * u + v);
            u = u_next;
            v = v_next;
            qk = qk * Q % n;
        }
    }
    if (u == 0 || v == 0) return true;
    for (unsigned r = 1; r < s; ++r) {
        v = (v * v + 2 * n * n - 2 * qk) % n;
        qk = qk * qk % n;
        if (v == 0) return true;
    }
    return false;
}

bool is_prime_big(const Natural& n) {
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return false;
    }
    const Natural r = isqrt(n);
    if (r * r == n) return false;
    Natural d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    if (!mr_witness_big(n, 2, d, s)) return false;
    return strong_lucas_prp(n);
}

Natural pollard_brent_big(const Natural& n, u64& state) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        const Natural c = Natural(splitmix64(state)) % (n - 1) + 1;
        Natural y = Natural(splitmix64(state)) % (n - 1) + 1;
        const unsigned m = 128;
        Natural g = 1, q = 1, x = 0, ys = 0;
        u64 r = 1;
        auto f = [&](const Natural& v) { return (v * v + c) % n; };
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            for (u64 k = 0; k < r && g == 1; k += m) {
                ys = y;
                const u64 steps = std::min<u64>(m, r - k);
                for (u64 i = 0; i < steps; ++i) {
                    y = f(y);
                    q = q * (x > y ? x - y : y - x) % n;
                }
                g = boost::multiprecision::gcd(q, n);
            }
            r <<= 1;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = f(ys);
                g = boost::multiprecision::gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (g != n) return g;
    }
    throw std::logic_error("pollard_brent_big: failed to split composite");
}

void split_big(const Natural& m, std::map<Natural, unsigned>& acc, u64& state) {
    if (m == 1) return;
    if (m <= std::numeric_limits<u64>::max()) {
        std::map<u64, unsigned> small;
        split_u64(m.convert_to<u64>(), small, state);
        for (const auto& [p, e] : small) acc[Natural(p)] += e;
        return;
    }
    if (is_prime_big(m)) {
        ++acc[m];
        return;
    }
    for (unsigned k : {2u, 3u}) {
        const Natural r = iroot(m, k);
        if (ipow(r, k) == m) {
            for (unsigned i = 0; i < k; ++i) split_big(r, acc, state);
            return;
        }
    }
    const Natural f = pollard_brent_big(m, state);
    split_big(f, acc, state);
    split_big(m / f, acc, state);
}

}  // namespace

const std::vector<std::uint32_t>& small_prime_table() {
    static const std::vector<std::uint32_t> table = [] {
        constexpr std::uint32_t limit = 1'000'000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<std::uint32_t> primes;
        primes.reserve(78498);
        for (std::uint32_t i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            primes.push_back(i);
            for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit; j += i)
                composite[static_cast<std::uint32_t>(j)] = true;
        }
        return primes;
    }();
    return table;
}

bool is_prime(const Natural& n) {
    if (n < 2) return false;
    if (n <= std::numeric_limits<u64>::max()) return is_prime_u64(n.convert_to<u64>());
    return is_prime_big(n);
}

Factorization factor(const Natural& n, const FactorConfig& cfg) {
    if (n < 1) throw ParameterError("factor: n must be >= 1");
    FactorizationBuilder builder;
    if (n == 1) return builder.take();

    const u64 trial_limit = std::min<u64>(cfg.trial_limit, 1'000'000);
    const auto& table = small_prime_table();
    u64 state = cfg.rng_seed ^ static_cast<u64>(n & std::numeric_limits<u64>::max());

    Natural rem = n;
    std::size_t i = 0;
    // Big-number phase: p^2 <= rem holds throughout since rem > 2^64 > 10^12.
    while (rem > std::numeric_limits<u64>::max() && i < table.size() && table[i] <= trial_limit) {
        const std::uint32_t p = table[i];
        if (rem % p == 0) {
            unsigned e = 0;
            do {
                rem /= p;
                ++e;
            } while (rem % p == 0);
            builder.push(p, e);
        }
        ++i;
    }

    if (rem <= std::numeric_limits<u64>::max()) {
        u64 r = rem.convert_to<u64>();
        for (; i < table.size() && table[i] <= trial_limit; ++i) {
            const u64 p = table[i];
            if (p * p > r) break;
            if (r % p == 0) {
                unsigned e = 0;
                do {
                    r /= p;
                    ++e;
                } while (r % p == 0);
                builder.push(p, e);
            }
        }
        if (r > 1) {
            std::map<u64, unsigned> tail;
            split_u64(r, tail, state);
            for (const auto& [p, e] : tail) builder.push(p, e);
        }
    } else {
        std::map<Natural, unsigned> tail;
        split_big(rem, tail, state);
        for (const auto& [p, e] : tail) builder.push(p, e);
    }

    Factorization result = builder.take();
    if (result.value() != n) throw std::logic_error("factor: recomposition mismatch");
    return result;
}

}  // namespace powlab
