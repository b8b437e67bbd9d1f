#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "frob/arith.hpp"

namespace frob {

/// Raised when a prime search runs out of its candidate budget.
struct SearchExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConstructionParams {
    double alpha = 23.0 / 8.0;
    double epsilon = 0.5;       // must stay inside (0, alpha - 1)
    int linnik_exponent = 5;    // sizes the default candidate budget
    u64 prime_bound = 100;      // stands in for (log x)^alpha
    u64 M = 0;
    u64 search_cap = 0;         // candidates examined; 0 derives from linnik_exponent
};

/// Primes p < bound with p-1 | M (ascending).
std::vector<u64> p_set_plus(u64 M, u64 bound);
/// Primes p < bound with p^2-1 | M.
std::vector<u64> p_set_minus(u64 M, u64 bound);
/// Primes p < bound with p-1 | M1 and p+1 | M2; requires gcd(M1, M2) = 2.
std::vector<u64> p_set_split(u64 M1, u64 M2, u64 bound);

struct SplitSearchResult {
    enum class Status { Found, Inconsistent, Exhausted } status = Status::Exhausted;
    u64 M1 = 0, M2 = 0;
    std::string detail;
};

/// Factor M = M1*M2 with gcd(M1, M2) = 2 so that every target prime lies in
/// p_set_split(M1, M2). Forced components are assigned first; remaining free
/// components are tried exhaustively up to the candidate budget. Targets that
/// pull an odd prime power to both sides are reported as inconsistent.
SplitSearchResult split_search(u64 M, std::span<const u64> targets, u64 search_cap = 1 << 20);

struct ConstructionRecipe {
    enum class Kind { Plus, Minus } kind = Kind::Plus;
    u64 s = 0;
    Factorization s_factors;
    u64 M = 0;                            // plus: the modulus; minus: M1*M2
    u64 M1 = 0, M2 = 0;                   // minus only
    u64 l1 = 0, l2 = 0, M2_prime = 0;     // minus only: M2 = M2_prime * l1^r1 * l2^r2
    u64 q1 = 0, q2 = 0;                   // plus uses q1 only
    u64 n = 0;
    u128 predicted_lower_bound = 0;

    std::string to_line(u128 verified_count) const;
};

/// q = the smallest prime > M with sq = 1 (mod M) and gcd(q, s) = 1; the
/// returned n = sq carries at least prod over p|s of (p-1)(p-2)/2 liars with
/// Jacobi class +1. Requires s odd squarefree, gcd(s, M) = 1, and p-1 | M for
/// every p | s.
ConstructionRecipe construct_plus(u64 s, u64 M, const ConstructionParams& params = {});

/// q1, q2 = the smallest primes > M1*M2 satisfying the two four-congruence
/// systems; n = s*q1*q2 is 1 mod M1 and -1 mod M2 and carries at least
/// prod over p|s of ((p^2-1)-(p-1))/2 liars with Jacobi class -1.
/// l1/l2 default to the two smallest odd primes dividing M2. The search also
/// pins the exact power of 2 in n-1 (or n+1) so the per-prime bound is met
/// exactly; s-primes whose 2-adic shift disagrees with the M1/M2 split are
/// rejected up front.
ConstructionRecipe construct_minus(u64 s, u64 M1, u64 M2, u64 l1 = 0, u64 l2 = 0,
                                   const ConstructionParams& params = {});

/// Up to `limit` products of k distinct primes from the filtered set
/// (primes >= cutoff), in lexicographic index-combination order.
std::vector<u64> s_set_sample(std::span<const u64> pset, int k, u64 cutoff, size_t limit);

/// exp(log(y) * logloglog(y) / loglog(y)); requires y > e^e.
double script_L(double y);

/// Desk-scale knobs derived from a nominal x: B = floor(log x / loglog x),
/// M = lcm(1..B), prime bound (log x)^alpha, and the k statistics.
struct DerivedKnobs {
    u64 B = 0;
    u64 M = 0;
    u64 prime_bound = 0;
    i64 k_plus = 0;
    i64 k_minus = 0;
};

DerivedKnobs knobs_from_x(double x, double alpha, int linnik_exponent = 5);

}  // namespace frob
