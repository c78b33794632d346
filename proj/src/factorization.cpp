#include "powlab/factorization.hpp"

#include "powlab/factor.hpp"

namespace powlab {

Factorization Factorization::from_entries(std::vector<FactorEntry> entries) {
    FactorizationBuilder builder;
    for (auto& e : entries) builder.push(std::move(e.prime), e.exponent);
    return builder.take();
}

Natural Factorization::value() const {
    Natural v = 1;
    for (const auto& e : entries_) v *= ipow(e.prime, e.exponent);
    return v;
}

bool Factorization::verify_primes() const {
    for (const auto& e : entries_) {
        if (!is_prime(e.prime)) return false;
    }
    return true;
}

void FactorizationBuilder::push(Natural prime, unsigned exponent) {
    if (prime < 2) throw ParameterError("factor entry prime must be >= 2");
    if (exponent == 0) throw ParameterError("factor entry exponent must be >= 1");
    if (!f_.entries_.empty() && f_.entries_.back().prime >= prime)
        throw ParameterError("factor entries must have strictly increasing primes");
    f_.entries_.push_back({std::move(prime), exponent});
}

Factorization FactorizationBuilder::take() {
    return std::move(f_);
}

Natural kernel(const Factorization& f) {
    Natural k = 1;
    for (const auto& e : f.entries()) k *= e.prime;
    return k;
}

Natural squarefree_part(const Factorization& f) {
    Natural q = 1;
    for (const auto& e : f.entries())
        if (e.exponent == 1) q *= e.prime;
    return q;
}

Natural powerful_part(const Factorization& f) {
    Natural b = 1;
    for (const auto& e : f.entries())
        if (e.exponent >= 2) b *= ipow(e.prime, e.exponent);
    return b;
}

Natural largest_prime_factor(const Factorization& f) {
    if (f.is_one()) return 1;
    return f.entries().back().prime;
}

std::optional<Natural> smallest_prime_factor(const Factorization& f) {
    if (f.is_one()) return std::nullopt;
    return f.entries().front().prime;
}

bool smallest_prime_exceeds(const Factorization& f, const Natural& bound) {
    const auto p = smallest_prime_factor(f);
    return !p.has_value() || *p > bound;
}

bool is_powerful(const Factorization& f) {
    return is_k_full(f, 2);
}

bool is_k_full(const Factorization& f, unsigned k) {
    for (const auto& e : f.entries())
        if (e.exponent < k) return false;
    return true;
}

bool is_squarefree(const Factorization& f) {
    for (const auto& e : f.entries())
        if (e.exponent != 1) return false;
    return true;
}

bool is_k_powered(const Factorization& f, const PoweredThreshold& k) {
    if (f.is_one()) return true;
    return pow_leq(kernel(f), k.num(), f.value(), k.den());
}

double powered_exponent(const Factorization& f) {
    const Natural n = f.value();
    if (n < 2) throw ParameterError("powered_exponent: requires n >= 2");
    return log_natural(n) / log_natural(kernel(f));
}

Natural smooth_part(const Factorization& f, const Natural& w) {
    if (w < 1) throw ParameterError("smooth_part: w must be >= 1");
    Natural s = 1;
    for (const auto& e : f.entries()) {
        if (e.prime > w) break;
        s *= ipow(e.prime, e.exponent);
    }
    return s;
}

bool is_w_smooth(const Factorization& f, const Natural& w) {
    if (w < 1) throw ParameterError("is_w_smooth: w must be >= 1");
    return f.is_one() || f.entries().back().prime <= w;
}

}  // namespace powlab
