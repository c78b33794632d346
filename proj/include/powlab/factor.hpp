#ifndef POWLAB_FACTOR_HPP
#define POWLAB_FACTOR_HPP

#include "powlab/factorization.hpp"
#include "powlab/natural.hpp"

#include <cstdint>

namespace powlab {

struct FactorConfig {
    // Trial division uses sieved primes up to this bound (clamped to 10^6).
    std::uint64_t trial_limit = 1'000'000;
    // Seed for the rho cycle; the factorization itself is unique, the seed
    // only fixes the internal search path.
    std::uint64_t rng_seed = 0x9E3779B97F4A7C15ull;
};

// Deterministic primality: 7-base Miller-Rabin below 2^64, Baillie-PSW above.
bool is_prime(const Natural& n);

// Exact factorization of n >= 1. Every emitted prime is primality-checked and
// the product is verified to recompose n.
Factorization factor(const Natural& n, const FactorConfig& cfg = {});

// Shared ascending table of the primes below 10^6 (built once, read-only).
const std::vector<std::uint32_t>& small_prime_table();

}  // namespace powlab

#endif
