#ifndef POWLAB_INTERVAL_LAB_HPP
#define POWLAB_INTERVAL_LAB_HPP

#include "powlab/natural.hpp"
#include "powlab/sieve.hpp"

#include <array>
#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace powlab {

// A named parameter as it appears in a report: exact rationals and integers
// stay exact, evaluated constants are doubles.
using ParamValue = std::variant<Natural, Rational, PoweredThreshold, double>;
using ParamList = std::vector<std::pair<std::string, ParamValue>>;

// One counting experiment: parameters, exact count, evaluated bound shape and
// the diagnostic ratio count / bound. Bound constants default to 1; ratios
// are reported, never asserted, except for the explicit 2y/log y sieve bound.
struct CountReport {
    Interval interval;
    ParamList params;
    Natural count;
    std::string bound_form;
    std::optional<double> bound_value;  // absent when the shape is undefined
    std::optional<double> ratio;
    std::chrono::duration<double> elapsed{};  // diagnostic only, never serialized
};

struct LabConfig {
    SieveConfig sieve;
    std::map<std::string, double> constants;  // overrides for bound-form constants
};

// Experiment t1: k-powered n whose powerful part is y^(1-delta)-smooth,
// i.e. every prime of n with exponent >= 2 is <= y^(1-delta) (exact
// rational-exponent comparison). Bound shape y^((3k+1)/(4k)) + y^(1-delta)/log(y+1).
CountReport count_t1(const Interval& iv, const PoweredThreshold& k, const Rational& delta,
                     const LabConfig& cfg = {});

// Experiment t2: k-powered n with w-smooth squarefree part.
// Bound shape y*log(w)/log(y) + y*exp(-log(y)/(3 log(w))) + y^(11/12).
CountReport count_t2(const Interval& iv, const PoweredThreshold& k, const Natural& w,
                     const LabConfig& cfg = {});

// Which bound shape a count-powered report evaluates against.
enum class PoweredBoundForm {
    loglog_power,  // y / exp(C (log log y)^c); undefined for y < 3
    log_power,     // y / exp((c_k log y)^0.09)
};

// Counts all k-powered n in the interval.
CountReport count_powered(const Interval& iv, const PoweredThreshold& k,
                          const LabConfig& cfg = {},
                          PoweredBoundForm form = PoweredBoundForm::loglog_power);

// Powerful n with p+(n)^2 <= y. Bound shape y^(11/12).
CountReport count_smooth_powerful(const Interval& iv, const LabConfig& cfg = {});

// n whose squarefree part is T-smooth for T = log(y+1) log log(y+2). The
// effective integer threshold floor(T) is recorded in params. Bound shape
// y log log(y+2) / log(y+2).
CountReport count_verysmooth(const Interval& iv, const LabConfig& cfg = {});

// |S_alpha|: n having a w-smooth divisor d > y^alpha, decided via the
// equivalence n in S_alpha <=> smooth_part(n, w) > y^alpha (exact comparison).
// Bound shape y (exp(-alpha log y / log w) + y^(-alpha/3)).
CountReport count_smooth_divisor(const Interval& iv, const Rational& alpha, const Natural& w,
                                 const LabConfig& cfg = {});

// Report around count_rough; bound shape 2y/log y (explicit constant, so this
// is the one ratio that may be asserted <= 1). Requires y >= 2.
CountReport count_rough_report(const Interval& iv, const LabConfig& cfg = {});

enum class CaseLabel { case1, case2, case3a, case3b, none };

std::string case_label_name(CaseLabel label);

// The four-way split n = a1 a2 b1 b2: a = a1 a2 squarefree, b = b1 b2
// powerful, gcd(a, b) = 1; a1 is the longest ascending prefix of a's primes
// with a1 <= y/z, b1 the longest ascending prefix of b's prime powers with
// b1 <= z (both exact).
struct CaseDecomposition {
    Natural n;
    Natural a, b;
    Natural a1, a2, b1, b2;
    CaseLabel label = CaseLabel::none;
};

// Labels: case1 if b1^2 > z; otherwise none if b2 = 1; otherwise case2 /
// case3a / case3b by p-(b2)^2 against z and y. k and delta are accepted for
// interface parity with the counting filters; the 3a/3b cut is fixed at
// sqrt(y).
CaseDecomposition decompose_case(const Natural& n, const Interval& iv, const PoweredThreshold& k,
                                 const Natural& z, const Rational& delta);

// Scans for k-powered n whose decomposition has b1^2 <= z yet b2 = 1. Under
// the preconditions z^k <= y^(k-1) (exact) and y <= x no such n exists, so
// the returned counterexample list should always be empty.
std::vector<Natural> verify_b2_claim(const Interval& iv, const PoweredThreshold& k,
                                     const Natural& z, const LabConfig& cfg = {});

// Case histogram over the k-powered numbers of the interval (diagnostic).
struct CaseHistogram {
    Interval interval;
    Natural z;
    std::array<Natural, 5> counts{};  // indexed by CaseLabel
    Natural k_powered_total;
};

CaseHistogram case_histogram(const Interval& iv, const PoweredThreshold& k, const Natural& z,
                             const Rational& delta, const LabConfig& cfg = {});

// Default z = floor(y^((k-1)/k)), the choice the t1 experiment instruments.
Natural default_z(const Natural& y, const PoweredThreshold& k);

}  // namespace powlab

#endif
