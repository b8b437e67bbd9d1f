#pragma once

#include <vector>

#include "frob/arith.hpp"

namespace frob {

/// The four per-prime liar counts at p, indexed by the global Jacobi class
/// (first sign) and the local symbol jacobi(disc, p) (second sign).
struct LocalLiarCounts {
    u128 lpp = 0;  // L2^{++}(n,p)
    u128 lpm = 0;  // L2^{+-}(n,p)
    u128 lmp = 0;  // L2^{-+}(n,p)
    u128 lmm = 0;  // L2^{--}(n,p)
};

/// Closed forms: half of (gcd(n-1,p-1)^2 - gcd(n-1,p-1)),
/// (gcd(n-1,p^2-1) - gcd(n-1,p-1)), (gcd(n^2-1,p-1) - gcd(n-1,p-1)) and
/// (gcd(p^2-1,n^2-1,n-p) - gcd(n-1,p-1)). Each difference is checked even
/// before halving.
LocalLiarCounts local_counts(u64 n, u64 p);

struct LiarCounts {
    u128 plus = 0;
    u128 minus = 0;
    u128 total() const { return plus + minus; }
    bool operator==(const LiarCounts&) const = default;
};

/// Anti-symmetrized product over the prime factors: exact count of monic
/// quadratic liars with global Jacobi class +1 (resp. -1).
u128 count_plus(const Factorization& nf);
u128 count_minus(const Factorization& nf);

/// Squarefree product forms; must agree with count_plus/count_minus.
LiarCounts count_squarefree(const Factorization& nf);

struct UpperBounds {
    u128 plus = 0;   // prod max(gcd(n-1,p^2-1), gcd(n-1,p-1)^2)
    u128 minus = 0;  // prod gcd(n^2-1, p^2-1)
};

UpperBounds upper_bounds(const Factorization& nf);

struct LambdaStats {
    u128 lambda = 1;   // lcm over p|n of p-1
    u128 lambda2 = 1;  // lcm over p|n of p^2-1
    u128 k_plus = 1;   // lambda / gcd(lambda, n-1)
    u128 k_minus = 1;  // lambda2 / gcd(lambda2, n^2-1)
    std::vector<std::pair<u64, u128>> d_table;  // (p, d_n(p))
};

LambdaStats lambda_stats(const Factorization& nf);

struct VanishingFlags {
    bool is_carmichael = false;    // squarefree with p-1 | n-1 for all p | n
    bool is_rigid_order2 = false;  // squarefree with p^2-1 | n-1 for all p | n
    bool minus_count_zero = false;
};

VanishingFlags vanishing_predicates(const Factorization& nf);

/// Closed-form counts for prime n, for comparison tables: total (n-1)^2,
/// plus (n-1)(n-2)/2, minus n(n-1)/2.
struct PrimeReference {
    u128 total = 0, plus = 0, minus = 0;
};

PrimeReference prime_reference(u64 p);

}  // namespace frob
