#ifndef POWLAB_FACTORIZATION_HPP
#define POWLAB_FACTORIZATION_HPP

#include "powlab/natural.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace powlab {

struct FactorEntry {
    Natural prime;
    unsigned exponent = 0;
};

// Exact prime-power decomposition, primes strictly increasing. The empty
// list represents n = 1.
class Factorization {
public:
    Factorization() = default;

    // Validates ordering and exponents (not primality; see verify_primes).
    static Factorization from_entries(std::vector<FactorEntry> entries);

    const std::vector<FactorEntry>& entries() const { return entries_; }
    bool is_one() const { return entries_.empty(); }

    Natural value() const;

    // True when every listed prime passes the deterministic primality check.
    bool verify_primes() const;

private:
    friend class FactorizationBuilder;
    std::vector<FactorEntry> entries_;
};

// Append-only builder used by factor() and the sieve; entries must arrive in
// ascending prime order.
class FactorizationBuilder {
public:
    void push(Natural prime, unsigned exponent);
    Factorization take();

private:
    Factorization f_;
};

// kappa(n): product of the distinct primes of n; kappa(1) = 1.
Natural kernel(const Factorization& f);

// q(n): product of primes dividing n exactly once; q(1) = 1.
Natural squarefree_part(const Factorization& f);

// n / q(n): product of prime powers with exponent >= 2; powerful, coprime to q(n).
Natural powerful_part(const Factorization& f);

// p+(n); by convention p+(1) = 1.
Natural largest_prime_factor(const Factorization& f);

// p-(n); nullopt is the unit sentinel for n = 1 (treated as larger than any bound).
std::optional<Natural> smallest_prime_factor(const Factorization& f);

// p-(n) > bound, with the n = 1 sentinel counting as exceeding every bound.
bool smallest_prime_exceeds(const Factorization& f, const Natural& bound);

bool is_powerful(const Factorization& f);
bool is_k_full(const Factorization& f, unsigned k);
bool is_squarefree(const Factorization& f);

// kappa(n)^num <= n^den, the exact k-powered test for k = num/den.
bool is_k_powered(const Factorization& f, const PoweredThreshold& k);

// log n / log kappa(n); requires n >= 2.
double powered_exponent(const Factorization& f);

// Largest divisor of n all of whose prime factors are <= w.
Natural smooth_part(const Factorization& f, const Natural& w);

// All prime factors <= w, i.e. smooth_part(f, w) == value(f).
bool is_w_smooth(const Factorization& f, const Natural& w);

}  // namespace powlab

#endif
