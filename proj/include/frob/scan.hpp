#pragma once

#include <functional>
#include <iosfwd>
#include <string>

#include "frob/liarcount.hpp"

namespace frob {

struct ScanRow {
    u64 n = 0;
    Factorization fact;
    u128 l2_plus = 0, l2_minus = 0;
    u128 ub_plus = 0, ub_minus = 0;
    u128 k_plus = 1, k_minus = 1;
    bool minus_vanished = false;
    bool is_carmichael = false;
};

struct ScanFooter {
    u64 y = 0;
    u128 sum_plus = 0, sum_minus = 0;
    u64 rows = 0, vanished = 0;
    double alpha_plus = 23.0 / 8.0, alpha_minus = 4.0 / 3.0;
    double y3_over_script_l = 0;  // NaN when y <= e^e
    double y_pow_plus = 0;        // y^(3 - 1/alpha_plus)
    double y_pow_minus = 0;
};

struct ScanOptions {
    int workers = 1;
    double alpha_plus = 23.0 / 8.0;
    double alpha_minus = 4.0 / 3.0;
    u64 seed = kDefaultFactorSeed;
};

/// One row per odd composite n <= y in increasing order, regardless of the
/// worker count. Rows re-assert count <= bound before they are emitted.
ScanFooter scan(u64 y, const ScanOptions& opts, const std::function<void(const ScanRow&)>& emit);

ScanRow scan_row(u64 n, u64 seed = kDefaultFactorSeed);

std::string scan_csv_header();
std::string scan_row_csv(const ScanRow& row);
std::string scan_footer_csv(const ScanFooter& f);

/// Full CSV document: header, rows, footer comment block.
void scan_write_csv(std::ostream& os, u64 y, const ScanOptions& opts);

}  // namespace frob
