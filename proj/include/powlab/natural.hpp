#ifndef POWLAB_NATURAL_HPP
#define POWLAB_NATURAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace powlab {

// Arbitrary-precision integer. Values handled by this library are kept
// nonnegative; the underlying type is signed so intermediate expressions
// (identity_check with n < 2d) may go negative.
using Natural = boost::multiprecision::cpp_int;

// Thrown when an argument violates an operation's precondition.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when an input is valid but exceeds configured resource limits.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Natural parse_natural(const std::string& text);
std::string to_decimal(const Natural& n);

// base^exp. Throws CapacityError when the result would be absurdly large
// (more than ~2^24 bits).
Natural ipow(const Natural& base, std::uint64_t exp);

// floor(sqrt(n)), n >= 0.
Natural isqrt(const Natural& n);

// floor(n^(1/k)), n >= 0, k >= 1.
Natural iroot(const Natural& n, std::uint64_t k);

// ln(n) for n >= 1, accurate to ~1 ulp even when n exceeds double range.
double log_natural(const Natural& n);

// Exact test a^ea <= b^eb without materializing huge powers when a cheap
// bit-length bound already decides the comparison.
bool pow_leq(const Natural& a, std::uint64_t ea, const Natural& b, std::uint64_t eb);

// floor(base^(e_num/e_den)) by exact integer power comparison.
Natural floor_rational_power(const Natural& base, std::uint64_t e_num, std::uint64_t e_den);

// Exact nonnegative rational p/q in lowest terms. Used for the exponent
// parameters (delta, alpha) so threshold comparisons stay integer-exact.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t num, std::int64_t den);

    static Rational parse(const std::string& text);  // "p/q" or "p"

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<boost::multiprecision::int128_t>(a.num_) * b.den_ <
               static_cast<boost::multiprecision::int128_t>(b.num_) * a.den_;
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// The poweredness threshold k >= 1, stored as an exact rational num/den in
// lowest terms. Keeping k rational makes the k-powered predicate a pure
// big-integer power comparison.
class PoweredThreshold {
public:
    PoweredThreshold() = default;
    PoweredThreshold(std::uint64_t num, std::uint64_t den);

    static PoweredThreshold parse(const std::string& text);  // "p/q" or "p"

    std::uint64_t num() const { return num_; }
    std::uint64_t den() const { return den_; }
    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

    friend bool operator==(const PoweredThreshold& a, const PoweredThreshold& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const PoweredThreshold& a, const PoweredThreshold& b) {
        return static_cast<boost::multiprecision::uint128_t>(a.num_) * b.den_ <
               static_cast<boost::multiprecision::uint128_t>(b.num_) * a.den_;
    }

private:
    std::uint64_t num_ = 1;
    std::uint64_t den_ = 1;
};

}  // namespace powlab

#endif
