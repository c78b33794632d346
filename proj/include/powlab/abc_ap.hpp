#ifndef POWLAB_ABC_AP_HPP
#define POWLAB_ABC_AP_HPP

#include "powlab/natural.hpp"
#include "powlab/sieve.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace powlab {

// The cubic identity (n+2d)^3 (n-2d) + 16 d^3 (n+d) = n^3 (n+4d), evaluated
// exactly. holds is always true; the operation exists as a regression tripwire.
struct IdentityCheck {
    Natural lhs1, lhs2, rhs;  // signed when n < 2d
    bool holds = false;
};

IdentityCheck identity_check(const Natural& n, const Natural& d);

// Reduced identity triple: with t = gcd(n, d), n' = n/t, d' = d/t and
// D = gcd(n'^3 (n'+4d'), 16 d'^3 (n'+d')), the triple is
//   a = (n'+2d')^3 (n'-2d')/D,  b = 16 d'^3 (n'+d')/D,  c = n'^3 (n'+4d')/D
// with a + b = c, pairwise coprime, and D = 2^e2 3^e3 (e2 <= 4, e3 <= 1).
struct AbcTriple {
    Natural n, d;
    Natural t;             // gcd(n, d)
    Natural n_red, d_red;  // n/t, d/t
    Natural D;
    unsigned e2 = 0, e3 = 0;
    Natural a, b, c;
    double quality = 0.0;  // log c / log kappa(abc)
};

// Requires d >= 1 and n > 2d. Throws std::logic_error if the computed D ever
// fails the 2^e2 3^e3 structure; that would falsify the gcd lemma under test.
AbcTriple build_abc_triple(const Natural& n, const Natural& d);

// log c / log kappa(abc) for coprime a + b = c.
double abc_quality(const Natural& a, const Natural& b, const Natural& c);

// One failed structural check from the exhaustive (n', d') sweep.
struct DViolation {
    std::uint64_t n_red = 0, d_red = 0;
    std::string reason;
};

// Checks every coprime pair 2d' < n' <= n_max for the D-structure: D = 2^e2 3^e3,
// e2 <= 4, e3 <= 1, a + b = c, pairwise coprime. Expected empty.
std::vector<DViolation> scan_d_structure(std::uint64_t n_max, unsigned threads = 1);

// A maximal run start, start+d, ..., start+(len-1)*d inside a solution set.
struct APWitness {
    Natural start;
    Natural d;
    std::size_t length = 0;
    std::vector<Natural> terms;
};

enum class APPredicate { powerful, k_powered };

// All maximal arithmetic runs of length >= min_len among the powerful
// (resp. k-powered) numbers of the interval, ordered by (start, d). A run is
// maximal when start-d and start+len*d are both outside the solution set.
std::vector<APWitness> find_ap_powered(const Interval& iv, APPredicate pred,
                                       const std::optional<PoweredThreshold>& k,
                                       std::size_t min_len, const SieveConfig& cfg = {});

// floor(x^((4k-5)/(8k))) by exact integer power comparison; requires k > 5/4.
Natural threshold_y(const Natural& x, const PoweredThreshold& k);

// Size (and witness) of a largest subset of {1..N} with no non-trivial
// k-term arithmetic progression, or a greedy lower-bound witness.
struct APFreeResult {
    std::uint64_t N = 0;
    unsigned k = 0;
    std::uint64_t size = 0;
    std::vector<std::uint64_t> witness;
    std::string method;  // "exact" or "greedy"
};

// Exact-search caps per k, sized so the worst case stays under a minute.
struct RkCaps {
    std::uint64_t k3 = 40;
    std::uint64_t k4 = 50;
    std::uint64_t k5plus = 64;

    std::uint64_t for_k(unsigned k) const { return k == 3 ? k3 : (k == 4 ? k4 : k5plus); }
};

// Branch-and-bound exact computation; throws CapacityError above the cap.
APFreeResult rk_exact(std::uint64_t N, unsigned k, const RkCaps& caps = {});

// Lexicographic greedy selection; the witness is verified progression-free.
APFreeResult rk_greedy(std::uint64_t N, unsigned k);

enum class BoundForm { gowers, r3_exp, gt4, lss };

BoundForm parse_bound_form(const std::string& name);
std::string bound_form_name(BoundForm form);

// Numeric evaluation of a progression-density bound shape at N:
//   gowers: N (loglog N)^(-c_k), c_k = 2^(-2^(k+9))   (needs constant "k")
//   r3_exp: N exp(-c (log N)^(1/9))                   (constant "c", default 1)
//   gt4:    N (log N)^(-c)                            (constant "c", default 1)
//   lss:    N exp(-(loglog N)^(c_k))                  (constant "c_k", default 1)
double bound_eval(double N, BoundForm form, const std::map<std::string, double>& constants);

}  // namespace powlab

#endif
