#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace frob {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

std::string to_string_u128(u128 v);
std::string to_string_i128(i128 v);

constexpr u64 mulmod(u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); }
u64 powmod(u64 base, u64 e, u64 m);
u128 gcd128(u128 a, u128 b);

/// Standard Jacobi symbol (a/n). Requires odd n >= 1; a may be negative.
/// Returns 0 exactly when gcd(a, n) > 1.
int jacobi(i128 a, u64 n);

/// Deterministic primality for the full 64-bit range: small trial division
/// plus strong-pseudoprime rounds over a proven base set.
bool is_prime(u64 n);

/// Modular inverse; empty when gcd(a, m) > 1.
std::optional<u64> inv_mod(u64 a, u64 m);

/// n as an ordered list of (prime, exponent) pairs, smallest prime first.
struct Factorization {
    u64 n = 1;
    std::vector<std::pair<u64, int>> factors;

    int omega() const { return (int)factors.size(); }
    bool squarefree() const;
    bool is_prime_input() const { return factors.size() == 1 && factors[0].second == 1; }
    u64 product() const;
    std::string to_string() const;  // e.g. "3^2*5"
};

inline constexpr u64 kDefaultFactorSeed = 0x9e3779b97f4a7c15ull;

/// Trial division up to 2^20, then Brent-cycle splitting with a fixed seed so
/// the output is reproducible run to run.
Factorization factorize(u64 n, u64 seed = kDefaultFactorSeed);

/// lcm(1, 2, ..., B). Throws std::overflow_error once the value leaves 64 bits
/// (B >= 43).
u64 lcm_upto(u64 B);

struct CrtResult {
    u64 value = 0;
    u64 modulus = 1;
};

/// Chinese remainder combination over pairwise-coprime moduli; rejects a
/// non-coprime pair naming the offending moduli.
CrtResult crt(std::span<const std::pair<u64, u64>> residues);

/// General two-congruence merge: x = r1 (mod m1), x = r2 (mod m2) with
/// arbitrary moduli; empty when inconsistent mod gcd(m1, m2).
std::optional<CrtResult> crt_merge(u64 r1, u64 m1, u64 r2, u64 m2);

}  // namespace frob
