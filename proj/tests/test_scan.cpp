#include "doctest.h"
#include "frob/construct.hpp"
#include "frob/enumerate.hpp"
#include "frob/scan.hpp"

#include <cmath>
#include <sstream>

using namespace frob;

namespace {

std::string csv_for(u64 y, int workers) {
    std::ostringstream os;
    ScanOptions opts;
    opts.workers = workers;
    scan_write_csv(os, y, opts);
    return os.str();
}

}  // namespace

TEST_CASE("rows for y = 15") {
    std::vector<ScanRow> rows;
    ScanFooter f = scan(15, {}, [&](const ScanRow& r) { rows.push_back(r); });
    REQUIRE(rows.size() == 2);

    CHECK(rows[0].n == 9);
    CHECK(rows[0].fact.to_string() == "3^2");
    CHECK(rows[0].l2_plus == 4);
    CHECK(rows[0].l2_minus == 0);
    CHECK(rows[0].ub_plus == 8);
    CHECK(rows[0].ub_minus == 8);
    CHECK(rows[0].k_plus == 1);
    CHECK(rows[0].k_minus == 1);
    CHECK(rows[0].minus_vanished);
    CHECK_FALSE(rows[0].is_carmichael);

    CHECK(rows[1].n == 15);
    CHECK(rows[1].l2_plus == 1);
    CHECK(rows[1].l2_minus == 1);
    CHECK(rows[1].ub_plus == 16);
    CHECK(rows[1].ub_minus == 64);
    CHECK(rows[1].k_plus == 2);
    CHECK(rows[1].k_minus == 3);
    CHECK_FALSE(rows[1].minus_vanished);

    CHECK(f.sum_plus == 5);
    CHECK(f.sum_minus == 1);
    CHECK(f.rows == 2);
    CHECK(f.vanished == 1);
}

TEST_CASE("empty scan below the first odd composite") {
    u64 count = 0;
    ScanFooter f = scan(8, {}, [&](const ScanRow&) { ++count; });
    CHECK(count == 0);
    CHECK(f.rows == 0);
    CHECK(f.sum_plus == 0);
    CHECK(f.sum_minus == 0);
}

TEST_CASE("csv output is byte-identical across worker counts") {
    std::string one = csv_for(1000, 1);
    std::string four = csv_for(1000, 4);
    CHECK(one == four);
    std::string three = csv_for(1000, 3);
    CHECK(one == three);
}

TEST_CASE("csv format is pinned") {
    CHECK(scan_csv_header() ==
          "n,factorization,l2_plus,l2_minus,ub_plus,ub_minus,k_plus,k_minus,minus_vanished,is_carmichael");
    ScanRow row = scan_row(15);
    CHECK(scan_row_csv(row) == "15,3*5,1,1,16,64,2,3,0,0");
    std::string doc = csv_for(15, 1);
    CHECK(doc.find("9,3^2,4,0,8,8,1,1,1,0\n") != std::string::npos);
    CHECK(doc.find("# sum_l2=6\n") != std::string::npos);
    CHECK(doc.find("# minus_vanishing_fraction=0.500000\n") != std::string::npos);
}

TEST_CASE("footer sums match the enumeration oracle at y = 200") {
    ScanFooter f = scan(200, {}, nullptr);
    u128 plus = 0, minus = 0;
    for (u64 n = 9; n <= 200; n += 2) {
        if (is_prime(n)) continue;
        EnumerationReport rep = enumerate_liars(n, false);
        plus += rep.counts.plus;
        minus += rep.counts.minus;
    }
    CHECK(f.sum_plus == plus);
    CHECK(f.sum_minus == minus);
}

TEST_CASE("comparison columns use the configured alphas") {
    ScanOptions opts;
    opts.alpha_plus = 2.0;
    opts.alpha_minus = 1.5;
    ScanFooter f = scan(100, opts, nullptr);
    CHECK(f.y_pow_plus == doctest::Approx(std::pow(100.0, 2.5)));
    CHECK(f.y_pow_minus == doctest::Approx(std::pow(100.0, 3.0 - 1.0 / 1.5)));
    CHECK(f.y3_over_script_l == doctest::Approx(1e6 / script_L(100.0)));
}
