#include "doctest.h"
#include "frob/enumerate.hpp"
#include "frob/liarcount.hpp"

#include <stdexcept>

using namespace frob;

namespace {

u128 prod_p2m1(const Factorization& nf) {
    u128 v = 1;
    for (auto [p, e] : nf.factors) v *= (u128)p * p - 1;
    return v;
}

}  // namespace

TEST_CASE("local count point values") {
    LocalLiarCounts c153 = local_counts(15, 3);
    CHECK(c153.lpp == 1);  // (gcd(14,2)^2 - gcd(14,2)) / 2
    LocalLiarCounts c155 = local_counts(15, 5);
    CHECK(c155.lmp == 1);  // (gcd(224,4) - gcd(14,4)) / 2 = (4-2)/2
    LocalLiarCounts c93 = local_counts(9, 3);
    CHECK(c93.lmm == 0);   // (gcd(8,80,6) - gcd(8,2)) / 2 = 0
    CHECK_THROWS_AS(local_counts(15, 7), std::invalid_argument);
}

TEST_CASE("count formulas at known point values") {
    CHECK(count_plus(factorize(15)) == 1);
    CHECK(count_minus(factorize(15)) == 1);
    CHECK(count_minus(factorize(9)) == 0);
    CHECK(count_minus(factorize(21)) == 0);
    CHECK(count_plus(factorize(9)) == 4);
}

TEST_CASE("count formulas reject primes and even n") {
    CHECK_THROWS_AS(count_plus(factorize(13)), std::invalid_argument);
    CHECK_THROWS_AS(count_minus(factorize(14)), std::invalid_argument);
    CHECK_THROWS_AS(count_plus(factorize(1)), std::invalid_argument);
}

TEST_CASE("formulas equal the enumeration oracle for odd composites up to 121") {
    for (u64 n = 9; n <= 121; n += 2) {
        if (is_prime(n)) continue;
        EnumerationReport rep = enumerate_liars(n, false);
        Factorization nf = factorize(n);
        CHECK(count_plus(nf) == rep.counts.plus);
        CHECK(count_minus(nf) == rep.counts.minus);
    }
}

TEST_CASE("squarefree product forms match the general formulas up to 2000") {
    for (u64 n = 9; n <= 2000; n += 2) {
        if (is_prime(n)) continue;
        Factorization nf = factorize(n);
        if (!nf.squarefree()) {
            CHECK_THROWS_AS(count_squarefree(nf), std::invalid_argument);
            continue;
        }
        LiarCounts sq = count_squarefree(nf);
        CHECK(sq.plus == count_plus(nf));
        CHECK(sq.minus == count_minus(nf));
    }
    CHECK(count_squarefree(factorize(15)) == LiarCounts{1, 1});
    Factorization f561 = factorize(561);
    CHECK(count_squarefree(f561).plus == count_plus(f561));
    CHECK(count_squarefree(f561).minus == count_minus(f561));
    Factorization f105 = factorize(105);
    EnumerationReport rep105 = enumerate_liars(105, false);
    CHECK(count_squarefree(f105) == rep105.counts);
}

TEST_CASE("upper bound point values") {
    Factorization f15 = factorize(15);
    UpperBounds b15 = upper_bounds(f15);
    CHECK(b15.minus == 64);  // gcd(224,8) * gcd(224,24)
    Factorization f9 = factorize(9);
    UpperBounds b9 = upper_bounds(f9);
    CHECK(b9.minus == 8);  // gcd(80, 8); dominates L2-(9) = 0
    CHECK(b9.minus >= count_minus(f9));
}

TEST_CASE("bounds dominate the counts for all odd composites up to 10^4") {
    for (u64 n = 9; n <= 10000; n += 2) {
        if (is_prime(n)) continue;
        Factorization nf = factorize(n);
        u128 plus = count_plus(nf), minus = count_minus(nf);
        UpperBounds ub = upper_bounds(nf);
        CHECK(plus <= ub.plus);
        CHECK(minus <= ub.minus);

        LambdaStats ls = lambda_stats(nf);
        // k-form bounds
        u128 dprod = 1;
        for (auto& [p, d] : ls.d_table) dprod *= d;
        CHECK(plus * ls.k_plus <= dprod);
        CHECK(minus * ls.k_minus <= prod_p2m1(nf));
        // the two exact divisibility relations behind them
        u128 lhs_minus = ls.k_minus;
        for (auto [p, e] : nf.factors) lhs_minus *= gcd128((u128)p * p - 1, (u128)n * n - 1);
        CHECK(prod_p2m1(nf) % lhs_minus == 0);
        u128 lhs_plus = ls.k_plus;
        for (auto [p, e] : nf.factors) {
            u128 g11 = gcd128((u128)n - 1, (u128)p - 1);
            lhs_plus *= std::max(gcd128((u128)n - 1, (u128)p * p - 1), g11 * g11);
        }
        CHECK(dprod % lhs_plus == 0);
    }
}

TEST_CASE("lambda statistics point values") {
    LambdaStats s15 = lambda_stats(factorize(15));
    CHECK(s15.lambda == 4);
    CHECK(s15.lambda2 == 24);
    CHECK(s15.k_minus == 3);
    CHECK(s15.k_plus == 2);

    LambdaStats s561 = lambda_stats(factorize(561));
    CHECK(s561.lambda == 80);
    CHECK(s561.k_plus == 1);  // Carmichael number

    LambdaStats s9 = lambda_stats(factorize(9));
    CHECK(s9.d_table.size() == 1);
    CHECK(s9.d_table[0].second == 8);  // gcd(8,2)^2 = 4 <= gcd(8,8) = 8, so p^2-1
}

TEST_CASE("vanishing predicates") {
    VanishingFlags v561 = vanishing_predicates(factorize(561));
    CHECK(v561.is_carmichael);
    CHECK_FALSE(v561.is_rigid_order2);

    VanishingFlags v9 = vanishing_predicates(factorize(9));
    CHECK(v9.minus_count_zero);
    CHECK_FALSE(v9.is_carmichael);

    VanishingFlags v15 = vanishing_predicates(factorize(15));
    CHECK_FALSE(v15.is_carmichael);
    CHECK_FALSE(v15.is_rigid_order2);
    CHECK_FALSE(v15.minus_count_zero);
}

TEST_CASE("Carmichael numbers have vanishing mixed local counts") {
    for (u64 n : {561ull, 1105ull, 1729ull, 2465ull, 2821ull, 6601ull, 8911ull}) {
        Factorization nf = factorize(n);
        REQUIRE(vanishing_predicates(nf).is_carmichael);
        for (auto [p, e] : nf.factors) CHECK(local_counts(n, p).lmp == 0);
    }
}

TEST_CASE("congruence hypotheses force strictly positive gcd differences") {
    for (u64 n = 9; n <= 2000; n += 2) {
        Factorization nf = factorize(n);
        for (auto [p, e] : nf.factors) {
            const u128 n1 = (u128)n - 1, n2 = (u128)n * n - 1, p1 = (u128)p - 1;
            for (u64 q : {3ull, 5ull, 7ull}) {
                if (n % q == q - 1 && p % q == 1)
                    CHECK(gcd128(n2, p1) > gcd128(n1, p1));
                if (n % q == q - 1 && p % q == q - 1)
                    CHECK(gcd128(gcd128(n2, (u128)p * p - 1), (u128)n - p) > gcd128(n1, p1));
            }
            if (p % 2 == 1) {
                u128 g = gcd128(n1, p1);
                CHECK(g * g > g);
            }
        }
    }
}

TEST_CASE("prime reference closed forms") {
    PrimeReference r5 = prime_reference(5);
    CHECK(r5.total == 16);
    CHECK(r5.plus == 6);
    CHECK(r5.minus == 10);
    CHECK_THROWS_AS(prime_reference(15), std::invalid_argument);
}
