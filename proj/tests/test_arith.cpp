#include "doctest.h"
#include "frob/arith.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

using namespace frob;

namespace {

// Independent oracle: plain Eratosthenes sieve.
std::vector<bool> sieve(u64 limit) {
    std::vector<bool> p(limit + 1, true);
    p[0] = false;
    if (limit >= 1) p[1] = false;
    for (u64 i = 2; i * i <= limit; ++i)
        if (p[i])
            for (u64 j = i * i; j <= limit; j += i) p[j] = false;
    return p;
}

}  // namespace

TEST_CASE("jacobi point values") {
    CHECK(jacobi(4, 15) == 1);
    CHECK(jacobi(5, 13) == -1);
    CHECK(jacobi(6, 15) == 0);
    CHECK(jacobi(0, 1) == 1);
    CHECK(jacobi(-1, 7) == -1);  // 7 = 3 mod 4
    CHECK(jacobi(-1, 13) == 1);
    CHECK(jacobi(2, 15) == 1);
}

TEST_CASE("jacobi rejects bad moduli") {
    CHECK_THROWS_AS(jacobi(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(jacobi(3, 0), std::invalid_argument);
}

TEST_CASE("jacobi equals the Legendre symbol on odd primes") {
    auto primes = sieve(500);
    for (u64 p = 3; p <= 499; p += 2) {
        if (!primes[p]) continue;
        for (u64 a = 0; a < p; ++a) {
            // Euler criterion as the independent route
            u64 e = powmod(a, (p - 1) / 2, p);
            int expected = e == 0 ? 0 : (e == 1 ? 1 : -1);
            CHECK(jacobi((i128)a, p) == expected);
        }
    }
}

TEST_CASE("jacobi is completely multiplicative in the numerator") {
    for (u64 n = 1; n <= 999; n += 2) {
        for (u64 a = 0; a < 40; ++a) {
            for (u64 b = 0; b < 40; ++b) {
                CHECK(jacobi((i128)a, n) * jacobi((i128)b, n) == jacobi((i128)(a * b), n));
            }
        }
    }
}

TEST_CASE("is_prime agrees with a sieve up to 10^4") {
    auto primes = sieve(10000);
    for (u64 n = 0; n <= 10000; ++n) CHECK(is_prime(n) == primes[n]);
}

TEST_CASE("is_prime point values") {
    CHECK(is_prime(2));
    CHECK(is_prime(17));
    CHECK_FALSE(is_prime(1105));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2147483647ull));          // 2^31 - 1
    CHECK_FALSE(is_prime(3215031751ull));    // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("factorize point values") {
    CHECK(factorize(15).factors == std::vector<std::pair<u64, int>>{{3, 1}, {5, 1}});
    CHECK(factorize(9).factors == std::vector<std::pair<u64, int>>{{3, 2}});
    CHECK(factorize(1105).factors == std::vector<std::pair<u64, int>>{{5, 1}, {13, 1}, {17, 1}});
    CHECK(factorize(1).factors.empty());
    CHECK(factorize(1).n == 1);
}

TEST_CASE("factorize round-trips below 10^5") {
    for (u64 n = 1; n <= 100000; ++n) {
        Factorization f = factorize(n);
        CHECK(f.product() == n);
        u64 prev = 0;
        for (auto [p, r] : f.factors) {
            CHECK(p > prev);
            CHECK(is_prime(p));
            CHECK(r >= 1);
            prev = p;
        }
    }
}

TEST_CASE("factorize splits a semiprime beyond the trial range deterministically") {
    const u64 p = 1048583, q = 1048589;  // both just above 2^20
    REQUIRE(is_prime(p));
    REQUIRE(is_prime(q));
    Factorization f1 = factorize(p * q);
    Factorization f2 = factorize(p * q);
    CHECK(f1.factors == f2.factors);
    CHECK(f1.factors == std::vector<std::pair<u64, int>>{{p, 1}, {q, 1}});
}

TEST_CASE("factorization helpers") {
    CHECK(factorize(45).to_string() == "3^2*5");
    CHECK(factorize(15).omega() == 2);
    CHECK(factorize(45).squarefree() == false);
    CHECK(factorize(105).squarefree() == true);
    CHECK(factorize(13).is_prime_input());
    CHECK_FALSE(factorize(9).is_prime_input());
}

TEST_CASE("lcm_upto values and divisibility") {
    CHECK(lcm_upto(1) == 1);
    CHECK(lcm_upto(6) == 60);
    CHECK(lcm_upto(10) == 2520);
    for (u64 B : {12ull, 20ull, 42ull, 46ull}) {
        u64 M = lcm_upto(B);
        for (u64 m = 1; m <= B; ++m) CHECK(M % m == 0);
    }
    CHECK(lcm_upto(46) == lcm_upto(43));  // 44, 45, 46 add no new prime power
    CHECK_THROWS_AS(lcm_upto(47), std::overflow_error);
}

TEST_CASE("crt point values") {
    std::vector<std::pair<u64, u64>> a{{1, 3}, {2, 5}};
    CrtResult r = crt(a);
    CHECK(r.value == 7);
    CHECK(r.modulus == 15);
    // exhaustive confirmation over the full residue range
    int matches = 0;
    for (u64 x = 0; x < 15; ++x)
        if (x % 3 == 1 && x % 5 == 2) {
            ++matches;
            CHECK(x == r.value);
        }
    CHECK(matches == 1);

    std::vector<std::pair<u64, u64>> single{{0, 7}};
    CHECK(crt(single).value == 0);
    CHECK(crt(single).modulus == 7);

    std::vector<std::pair<u64, u64>> ones{{1, 4}, {1, 9}};
    CHECK(crt(ones).value == 1);
    CHECK(crt(ones).modulus == 36);
}

TEST_CASE("crt rejects non-coprime moduli naming the pair") {
    std::vector<std::pair<u64, u64>> bad{{1, 6}, {2, 4}};
    CHECK_THROWS_WITH_AS(crt(bad), doctest::Contains("6"), std::invalid_argument);
}

TEST_CASE("crt_merge matches brute force on small moduli") {
    for (u64 m1 = 1; m1 <= 12; ++m1) {
        for (u64 m2 = 1; m2 <= 12; ++m2) {
            u64 l = std::lcm(m1, m2);
            for (u64 r1 = 0; r1 < m1; ++r1) {
                for (u64 r2 = 0; r2 < m2; ++r2) {
                    std::optional<u64> expected;
                    for (u64 x = 0; x < l; ++x)
                        if (x % m1 == r1 && x % m2 == r2) {
                            expected = x;
                            break;
                        }
                    auto got = crt_merge(r1, m1, r2, m2);
                    CHECK(got.has_value() == expected.has_value());
                    if (got && expected) {
                        CHECK(got->value == *expected);
                        CHECK(got->modulus == l);
                    }
                }
            }
        }
    }
}

TEST_CASE("u128 helpers") {
    CHECK(to_string_u128(0) == "0");
    CHECK(to_string_u128((u128)UINT64_MAX + 1) == "18446744073709551616");
    CHECK(to_string_i128(-(i128)5) == "-5");
    CHECK(gcd128((u128)12, (u128)18) == 6);
    CHECK(powmod(2, 340, 341) == 1);
}
