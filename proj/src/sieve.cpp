#include "powlab/sieve.hpp"

#include "powlab/factor.hpp"
#include "powlab/parallel.hpp"

#include <algorithm>
#include <limits>

namespace powlab {

namespace {

using u64 = std::uint64_t;

constexpr u64 kPrimeTableCap = 1ull << 28;
constexpr u64 kStreamCap = 1ull << 48;
constexpr u64 kMaterializeCap = 1ull << 25;

void check_interval(const Interval& iv) {
    if (iv.x < 0) throw ParameterError("interval: x must be >= 0");
    if (iv.y < 1) throw ParameterError("interval: y must be >= 1");
    if (iv.y > kStreamCap) throw CapacityError("interval: y exceeds 2^48");
}

u64 isqrt_u64(u64 n) {
    return isqrt(Natural(n)).convert_to<u64>();
}

// Fully factors one segment with all primes p <= sqrt(last); the leftover in
// each slot is then 1 or a single prime.
std::vector<Factorization> factor_segment_u64(u64 first, std::size_t len,
                                              const std::vector<u64>& primes) {
    std::vector<u64> rem(len);
    for (std::size_t i = 0; i < len; ++i) rem[i] = first + static_cast<u64>(i);
    std::vector<std::vector<FactorEntry>> entries(len);
    const u64 last = first + static_cast<u64>(len) - 1;
    for (const u64 p : primes) {
        if (p * p > last) break;
        const u64 r = first % p;
        std::size_t k = static_cast<std::size_t>(r == 0 ? 0 : p - r);
        for (; k < len; k += static_cast<std::size_t>(p)) {
            unsigned e = 0;
            while (rem[k] % p == 0) {
                rem[k] /= p;
                ++e;
            }
            if (e > 0) entries[k].push_back({Natural(p), e});
        }
    }
    std::vector<Factorization> out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        if (rem[i] > 1) entries[i].push_back({Natural(rem[i]), 1});
        out.push_back(Factorization::from_entries(std::move(entries[i])));
    }
    return out;
}

// Fallback regime: sieve only the base primes, then finish every cofactor
// with primality testing / general factoring.
std::vector<Factorization> factor_segment_big(const Natural& first, std::size_t len,
                                              const std::vector<u64>& base_primes,
                                              const SieveConfig& cfg) {
    std::vector<Natural> rem(len);
    for (std::size_t i = 0; i < len; ++i) rem[i] = first + i;
    std::vector<std::vector<FactorEntry>> entries(len);
    for (const u64 p : base_primes) {
        const u64 r = (first % p).convert_to<u64>();
        std::size_t k = static_cast<std::size_t>(r == 0 ? 0 : p - r);
        for (; k < len; k += static_cast<std::size_t>(p)) {
            unsigned e = 0;
            while (rem[k] % p == 0) {
                rem[k] /= p;
                ++e;
            }
            if (e > 0) entries[k].push_back({Natural(p), e});
        }
    }
    FactorConfig tail_cfg;
    tail_cfg.trial_limit = 0;  // cofactors have no prime factor below the base bound
    tail_cfg.rng_seed = cfg.rng_seed;
    std::vector<Factorization> out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        if (rem[i] > 1) {
            const Factorization tail = factor(rem[i], tail_cfg);
            for (const auto& e : tail.entries()) entries[i].push_back(e);
        }
        out.push_back(Factorization::from_entries(std::move(entries[i])));
    }
    return out;
}

}  // namespace

void scan_factored(const Interval& iv, const SieveConfig& cfg,
                   const std::function<void(std::size_t, const Natural&, std::vector<Factorization>&&)>& sink) {
    check_interval(iv);
    if (cfg.segment_size < 1) throw ParameterError("segment_size must be >= 1");
    if (cfg.spf_limit < 2) throw ParameterError("spf_limit must be >= 2");
    const u64 y = iv.y.convert_to<u64>();
    const std::size_t seg = cfg.segment_size;
    const std::size_t num_segments = static_cast<std::size_t>((y + seg - 1) / seg);

    const Natural limit = iv.x + iv.y;
    const bool fits_u64 = limit <= std::numeric_limits<u64>::max();
    const u64 root = fits_u64 ? isqrt_u64(limit.convert_to<u64>()) : 0;

    if (fits_u64 && root <= cfg.spf_limit) {
        const auto primes = primes_up_to(root);
        const u64 x0 = iv.x.convert_to<u64>();
        dispatch_indexed(num_segments, cfg.threads, [&](std::size_t s) {
            const u64 first = x0 + 1 + static_cast<u64>(s) * seg;
            const std::size_t len = static_cast<std::size_t>(
                std::min<u64>(seg, y - static_cast<u64>(s) * seg));
            sink(s, Natural(first), factor_segment_u64(first, len, primes));
        });
    } else {
        const auto base_primes = primes_up_to(std::min<u64>(1'000'000, cfg.spf_limit));
        dispatch_indexed(num_segments, cfg.threads, [&](std::size_t s) {
            const Natural first = iv.x + 1 + Natural(s) * seg;
            const std::size_t len = static_cast<std::size_t>(
                std::min<u64>(seg, y - static_cast<u64>(s) * seg));
            sink(s, first, factor_segment_big(first, len, base_primes, cfg));
        });
    }
}

std::vector<u64> primes_up_to(u64 bound) {
    if (bound > kPrimeTableCap) throw CapacityError("primes_up_to: bound exceeds 2^28");
    std::vector<u64> primes;
    if (bound < 2) return primes;
    std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
    for (u64 i = 2; i <= bound; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        primes.push_back(i);
        for (u64 j = i * i; j <= bound; j += i) composite[static_cast<std::size_t>(j)] = true;
    }
    return primes;
}

std::vector<std::pair<Natural, Factorization>> factor_interval(const Interval& iv,
                                                               const SieveConfig& cfg) {
    check_interval(iv);
    if (iv.y > kMaterializeCap) throw CapacityError("factor_interval: y exceeds 2^25");
    const std::size_t seg = cfg.segment_size;
    const std::size_t num_segments =
        static_cast<std::size_t>((iv.y.convert_to<u64>() + seg - 1) / seg);
    std::vector<std::vector<std::pair<Natural, Factorization>>> slots(num_segments);
    scan_factored(iv, cfg, [&](std::size_t s, const Natural& first, std::vector<Factorization>&& fs) {
        auto& slot = slots[s];
        slot.reserve(fs.size());
        for (std::size_t i = 0; i < fs.size(); ++i)
            slot.emplace_back(first + i, std::move(fs[i]));
    });
    std::vector<std::pair<Natural, Factorization>> out;
    out.reserve(static_cast<std::size_t>(iv.y.convert_to<u64>()));
    for (auto& slot : slots)
        for (auto& item : slot) out.push_back(std::move(item));
    return out;
}

Natural count_matching(const Interval& iv, const SieveConfig& cfg,
                       const std::function<bool(const Natural&, const Factorization&)>& pred) {
    check_interval(iv);
    const std::size_t seg = cfg.segment_size;
    const std::size_t num_segments =
        static_cast<std::size_t>((iv.y.convert_to<u64>() + seg - 1) / seg);
    std::vector<u64> counts(num_segments, 0);
    scan_factored(iv, cfg, [&](std::size_t s, const Natural& first, std::vector<Factorization>&& fs) {
        u64 c = 0;
        for (std::size_t i = 0; i < fs.size(); ++i)
            if (pred(first + i, fs[i])) ++c;
        counts[s] = c;
    });
    Natural total = 0;
    for (const u64 c : counts) total += c;
    return total;
}

std::vector<Natural> collect_matching(
    const Interval& iv, const SieveConfig& cfg,
    const std::function<bool(const Natural&, const Factorization&)>& pred) {
    check_interval(iv);
    const std::size_t seg = cfg.segment_size;
    const std::size_t num_segments =
        static_cast<std::size_t>((iv.y.convert_to<u64>() + seg - 1) / seg);
    std::vector<std::vector<Natural>> slots(num_segments);
    scan_factored(iv, cfg, [&](std::size_t s, const Natural& first, std::vector<Factorization>&& fs) {
        for (std::size_t i = 0; i < fs.size(); ++i)
            if (pred(first + i, fs[i])) slots[s].push_back(first + i);
    });
    std::vector<Natural> out;
    for (auto& slot : slots)
        for (auto& n : slot) out.push_back(std::move(n));
    return out;
}

std::vector<Natural> enumerate_powerful(const Interval& iv) {
    check_interval(iv);
    const Natural limit = iv.x + iv.y;
    const Natural cbrt = iroot(limit, 3);
    if (cbrt > (1u << 27)) throw CapacityError("enumerate_powerful: interval endpoint exceeds 2^81");
    const std::size_t bmax = cbrt.convert_to<std::size_t>();

    // squarefree flags for candidate b values
    std::vector<bool> has_square(bmax + 1, false);
    for (const u64 p : primes_up_to(isqrt(cbrt).convert_to<u64>())) {
        for (u64 m = p * p; m <= bmax; m += p * p) has_square[static_cast<std::size_t>(m)] = true;
    }

    std::vector<Natural> out;
    for (std::size_t b = 1; b <= bmax; ++b) {
        if (has_square[b]) continue;
        const Natural b3 = Natural(b) * b * b;
        const Natural a_max = isqrt(limit / b3);
        Natural a = isqrt(iv.x / b3);
        while (a * a * b3 <= iv.x) ++a;
        for (; a <= a_max; ++a) out.push_back(a * a * b3);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Natural> enumerate_k_powered(const Interval& iv, const PoweredThreshold& k,
                                         const SieveConfig& cfg) {
    return collect_matching(iv, cfg, [&k](const Natural&, const Factorization& f) {
        return is_k_powered(f, k);
    });
}

Natural count_rough(const Interval& iv, const SieveConfig& cfg) {
    check_interval(iv);
    if (iv.y > (1u << 31)) throw CapacityError("count_rough: y exceeds 2^31");
    (void)cfg;
    const std::size_t y = iv.y.convert_to<std::size_t>();
    std::vector<bool> marked(y, false);
    // primes with p^2 <= y
    for (const u64 p : primes_up_to(isqrt(iv.y).convert_to<u64>())) {
        const u64 r = ((iv.x + 1) % p).convert_to<u64>();
        std::size_t k = static_cast<std::size_t>(r == 0 ? 0 : p - r);
        for (; k < y; k += static_cast<std::size_t>(p)) marked[k] = true;
    }
    u64 count = 0;
    for (std::size_t i = 0; i < y; ++i)
        if (!marked[i]) ++count;
    return Natural(count);
}

}  // namespace powlab
