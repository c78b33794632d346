#include "powlab/natural.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>

namespace powlab {

Natural parse_natural(const std::string& text) {
    if (text.empty()) throw ParameterError("empty integer literal");
    for (char ch : text) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ParameterError("invalid integer literal: " + text);
    }
    return Natural(text);
}

std::string to_decimal(const Natural& n) {
    return n.str();
}

Natural ipow(const Natural& base, std::uint64_t exp) {
    if (exp == 0) return 1;
    if (base == 0) return 0;
    const std::uint64_t bits = boost::multiprecision::msb(base) + 1;
    if (bits * exp > (1ull << 24))
        throw CapacityError("ipow: result would exceed 2^24 bits");
    Natural result = 1;
    Natural b = base;
    std::uint64_t e = exp;
    while (e > 0) {
        if (e & 1) result *= b;
        e >>= 1;
        if (e > 0) b *= b;
    }
    return result;
}

Natural isqrt(const Natural& n) {
    if (n < 0) throw ParameterError("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

Natural iroot(const Natural& n, std::uint64_t k) {
    if (n < 0) throw ParameterError("iroot: negative argument");
    if (k == 0) throw ParameterError("iroot: k must be >= 1");
    if (k == 1 || n <= 1) return n;
    if (k == 2) return isqrt(n);
    const std::uint64_t bits = boost::multiprecision::msb(n) + 1;
    if (k >= bits) return 1;
    // Binary search on r with r^k <= n < (r+1)^k.
    Natural lo = 1;
    Natural hi = Natural(1) << static_cast<unsigned>(bits / k + 1);
    while (lo < hi) {
        Natural mid = (lo + hi + 1) >> 1;
        if (ipow(mid, k) <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

double log_natural(const Natural& n) {
    if (n < 1) throw ParameterError("log_natural: argument must be >= 1");
    if (n == 1) return 0.0;
    const std::uint64_t bits = boost::multiprecision::msb(n) + 1;
    if (bits <= 63) return std::log(n.convert_to<double>());
    const std::uint64_t shift = bits - 63;
    const std::uint64_t top = (n >> static_cast<unsigned>(shift)).convert_to<std::uint64_t>();
    return std::log(static_cast<double>(top)) + static_cast<double>(shift) * M_LN2;
}

bool pow_leq(const Natural& a, std::uint64_t ea, const Natural& b, std::uint64_t eb) {
    if (a == 0) return true;
    if (b == 0) return false;  // a^ea >= 1 > 0
    if (ea == 0) return true;  // 1 <= b^eb
    if (eb == 0) return a == 1;
    if (a == 1) return true;
    if (b == 1) return false;
    // 2^(bits-1) <= v < 2^bits, so a^ea >= 2^(ea*(bits_a-1)) and b^eb < 2^(eb*bits_b).
    const std::uint64_t bits_a = boost::multiprecision::msb(a) + 1;
    const std::uint64_t bits_b = boost::multiprecision::msb(b) + 1;
    using u128 = unsigned __int128;
    if (static_cast<u128>(ea) * (bits_a - 1) >= static_cast<u128>(eb) * bits_b) return false;
    if (static_cast<u128>(ea) * bits_a <= static_cast<u128>(eb) * (bits_b - 1)) return true;
    return ipow(a, ea) <= ipow(b, eb);
}

Natural floor_rational_power(const Natural& base, std::uint64_t e_num, std::uint64_t e_den) {
    if (e_den == 0) throw ParameterError("floor_rational_power: zero denominator");
    if (base == 0) return 0;
    if (e_num == 0) return 1;
    const std::uint64_t g = std::gcd(e_num, e_den);
    e_num /= g;
    e_den /= g;
    const std::uint64_t bits = base == 1 ? 1 : boost::multiprecision::msb(base) + 1;
    Natural lo = 0;
    Natural hi = Natural(1) << static_cast<unsigned>(bits * e_num / e_den + 2);
    while (lo < hi) {
        const Natural mid = (lo + hi + 1) >> 1;
        if (pow_leq(mid, e_den, base, e_num))
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

namespace {

std::pair<std::string, std::string> split_fraction(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return {text, "1"};
    return {text.substr(0, slash), text.substr(slash + 1)};
}

std::int64_t parse_int64(const std::string& text) {
    if (text.empty()) throw ParameterError("empty number in rational literal");
    for (char ch : text) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ParameterError("invalid rational literal component: " + text);
    }
    try {
        return std::stoll(text);
    } catch (const std::out_of_range&) {
        throw ParameterError("rational component out of range: " + text);
    }
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ <= 0) throw ParameterError("rational denominator must be positive");
    if (num_ < 0) throw ParameterError("rational must be nonnegative");
    const std::int64_t g = boost::integer::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Rational Rational::parse(const std::string& text) {
    const auto [p, q] = split_fraction(text);
    return Rational(parse_int64(p), parse_int64(q));
}

std::string Rational::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

PoweredThreshold::PoweredThreshold(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw ParameterError("k denominator must be positive");
    if (num_ < den_) throw ParameterError("k must be >= 1");
    const std::uint64_t g = boost::integer::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

PoweredThreshold PoweredThreshold::parse(const std::string& text) {
    const auto [p, q] = split_fraction(text);
    const std::int64_t num = parse_int64(p);
    const std::int64_t den = parse_int64(q);
    return PoweredThreshold(static_cast<std::uint64_t>(num), static_cast<std::uint64_t>(den));
}

std::string PoweredThreshold::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace powlab
