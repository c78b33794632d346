#ifndef POWLAB_SIEVE_HPP
#define POWLAB_SIEVE_HPP

#include "powlab/factorization.hpp"
#include "powlab/natural.hpp"

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace powlab {

// The half-open short interval (x, x+y].
struct Interval {
    Natural x;
    Natural y;
};

struct SieveConfig {
    // Largest prime the full smallest-prime-factor regime will sieve with;
    // above it the engine falls back to per-cofactor finishing.
    std::uint64_t spf_limit = 1ull << 26;
    std::size_t segment_size = 1u << 16;
    std::uint64_t rng_seed = 0x9E3779B97F4A7C15ull;
    unsigned threads = 1;
};

// Exactly the primes <= bound, ascending. Bounds above 2^28 are refused.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

// Factorizations of every n in (x, x+y], ascending. Materializes the whole
// interval; refuses y > 2^25.
std::vector<std::pair<Natural, Factorization>> factor_interval(const Interval& iv,
                                                               const SieveConfig& cfg = {});

// Low-level streaming scan; visit is called once per segment, possibly
// concurrently, with the factorizations of [first, first+len). Segment
// indices are contiguous from 0, so per-segment results can be merged in a
// schedule-independent order.
void scan_factored(const Interval& iv, const SieveConfig& cfg,
                   const std::function<void(std::size_t seg_index, const Natural& first,
                                            std::vector<Factorization>&&)>& visit);

// Streaming scan: pred is applied to every n in the interval (possibly from
// several threads); the count is schedule-independent.
Natural count_matching(const Interval& iv, const SieveConfig& cfg,
                       const std::function<bool(const Natural&, const Factorization&)>& pred);

// Streaming scan collecting the matching n in ascending order.
std::vector<Natural> collect_matching(
    const Interval& iv, const SieveConfig& cfg,
    const std::function<bool(const Natural&, const Factorization&)>& pred);

// Powerful numbers in (x, x+y] via the unique representation n = a^2 b^3
// with b squarefree.
std::vector<Natural> enumerate_powerful(const Interval& iv);

// k-powered numbers in (x, x+y], ascending.
std::vector<Natural> enumerate_k_powered(const Interval& iv, const PoweredThreshold& k,
                                         const SieveConfig& cfg = {});

// #{ n in (x, x+y] : no prime p with p^2 <= y divides n }; requires y >= 2.
// n = 1 counts when present.
Natural count_rough(const Interval& iv, const SieveConfig& cfg = {});

}  // namespace powlab

#endif
