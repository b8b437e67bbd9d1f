#include "doctest.h"
#include "frob/enumerate.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

using namespace frob;

TEST_CASE("point values for small n") {
    EnumerationReport r15 = enumerate_liars(15, true);
    CHECK(r15.counts == LiarCounts{1, 1});
    REQUIRE(r15.liars.size() == 2);
    CHECK(r15.liars[0].a == 0);
    CHECK(r15.liars[0].b == 1);
    CHECK(r15.liars[0].jacobi_class == -1);
    CHECK(r15.liars[1].a == 0);
    CHECK(r15.liars[1].b == 14);
    CHECK(r15.liars[1].jacobi_class == 1);

    CHECK(enumerate_liars(9, false).counts.minus == 0);
    EnumerationReport r5 = enumerate_liars(5, false);
    CHECK(r5.counts == LiarCounts{6, 10});
}

TEST_CASE("every pair is classified exactly once") {
    for (u64 n : {9ull, 15ull, 45ull, 99ull, 121ull}) {
        EnumerationReport rep = enumerate_liars(n, false);
        CHECK(rep.partition_ok());
    }
}

TEST_CASE("prime reference counts up to 61") {
    for (u64 p = 3; p <= 61; p += 2) {
        if (!is_prime(p)) continue;
        EnumerationReport rep = enumerate_liars(p, false);
        CHECK(rep.counts.plus == (u128)(p - 1) * (p - 2) / 2);
        CHECK(rep.counts.minus == (u128)p * (p - 1) / 2);
        CHECK(rep.counts.total() == (u128)(p - 1) * (p - 1));
        CHECK(rep.factor_events == 0);
    }
}

TEST_CASE("worker count does not change the report") {
    EnumerationReport serial = enumerate_liars(225, true, 1);
    EnumerationReport parallel = enumerate_liars(225, true, 4);
    CHECK(serial.counts == parallel.counts);
    CHECK(serial.failures_by_step == parallel.failures_by_step);
    CHECK(serial.factor_events == parallel.factor_events);
    REQUIRE(serial.liars.size() == parallel.liars.size());
    for (size_t i = 0; i < serial.liars.size(); ++i) {
        CHECK(serial.liars[i].a == parallel.liars[i].a);
        CHECK(serial.liars[i].b == parallel.liars[i].b);
    }
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(enumerate_liars(14, false), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_liars(6001, false), std::invalid_argument);  // default cap 5000
    CHECK_NOTHROW(enumerate_liars(101, false, 1, 101));
}

TEST_CASE("fermat liar point values") {
    CHECK(fermat_liars(9) == std::vector<u64>{1, 8});
    CHECK(fermat_liars(15) == std::vector<u64>{1, 4, 11, 14});
    // Carmichael: every residue coprime to 561
    std::vector<u64> f561 = fermat_liars(561);
    u64 phi = 0;
    for (u64 a = 1; a < 561; ++a)
        if (std::gcd(a, 561ull) == 1) ++phi;
    CHECK(f561.size() == phi);
    CHECK(phi == 320);
}

TEST_CASE("fermat liars equal the degree-1 frobenius passes") {
    for (u64 n = 9; n <= 301; n += 2) {
        if (is_prime(n)) continue;
        std::vector<u64> direct = fermat_liars(n);
        std::vector<u64> via_test;
        for (u64 a = 1; a < n; ++a) {
            PolyMod f = PolyMod::from_coeffs(n, {(n - a) % n, 1});
            if (frobenius_d_test(n, f).passed()) via_test.push_back(a);
        }
        CHECK(direct == via_test);
    }
}

TEST_CASE("liar csv dump") {
    EnumerationReport rep = enumerate_liars(15, true);
    std::ostringstream os;
    write_liar_csv(os, rep);
    CHECK(os.str() == "n,a,b,jacobi_class\n15,0,1,-1\n15,0,14,1\n");
}
