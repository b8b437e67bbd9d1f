#include "frob/scan.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "frob/construct.hpp"

namespace frob {

ScanRow scan_row(u64 n, u64 seed) {
    ScanRow row;
    row.n = n;
    row.fact = factorize(n, seed);
    row.l2_plus = count_plus(row.fact);
    row.l2_minus = count_minus(row.fact);
    UpperBounds ub = upper_bounds(row.fact);
    row.ub_plus = ub.plus;
    row.ub_minus = ub.minus;
    LambdaStats ls = lambda_stats(row.fact);
    row.k_plus = ls.k_plus;
    row.k_minus = ls.k_minus;
    row.minus_vanished = row.l2_minus == 0;
    VanishingFlags vf = vanishing_predicates(row.fact);
    row.is_carmichael = vf.is_carmichael;
    return row;
}

ScanFooter scan(u64 y, const ScanOptions& opts, const std::function<void(const ScanRow&)>& emit) {
    std::vector<u64> ns;
    for (u64 n = 9; n <= y; n += 2)
        if (!is_prime(n)) ns.push_back(n);

    int workers = std::max(1, opts.workers);
    std::vector<ScanRow> rows(ns.size());
    if (workers == 1 || ns.size() < 2) {
        for (size_t i = 0; i < ns.size(); ++i) rows[i] = scan_row(ns[i], opts.seed);
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (ns.size() + workers - 1) / (size_t)workers;
        for (int w = 0; w < workers; ++w) {
            size_t lo = std::min(ns.size(), (size_t)w * chunk);
            size_t hi = std::min(ns.size(), lo + chunk);
            pool.emplace_back([&, lo, hi] {
                for (size_t i = lo; i < hi; ++i) rows[i] = scan_row(ns[i], opts.seed);
            });
        }
        for (auto& t : pool) t.join();
    }

    ScanFooter f;
    f.y = y;
    f.alpha_plus = opts.alpha_plus;
    f.alpha_minus = opts.alpha_minus;
    for (const auto& row : rows) {
        if (row.l2_plus > row.ub_plus || row.l2_minus > row.ub_minus)
            throw std::logic_error("scan: count exceeds its upper bound at n=" + std::to_string(row.n));
        if (emit) emit(row);
        f.sum_plus += row.l2_plus;
        f.sum_minus += row.l2_minus;
        ++f.rows;
        if (row.minus_vanished) ++f.vanished;
    }
    double dy = (double)y;
    bool l_defined = dy > std::exp(std::exp(1.0));
    f.y3_over_script_l = l_defined ? dy * dy * dy / script_L(dy) : std::nan("");
    f.y_pow_plus = std::pow(dy, 3.0 - 1.0 / opts.alpha_plus);
    f.y_pow_minus = std::pow(dy, 3.0 - 1.0 / opts.alpha_minus);
    return f;
}

namespace {

std::string fmt_g6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string fmt_f6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

std::string scan_csv_header() {
    return "n,factorization,l2_plus,l2_minus,ub_plus,ub_minus,k_plus,k_minus,minus_vanished,is_carmichael";
}

std::string scan_row_csv(const ScanRow& row) {
    std::string out = std::to_string(row.n);
    out += ',';
    out += row.fact.to_string();
    out += ',';
    out += to_string_u128(row.l2_plus);
    out += ',';
    out += to_string_u128(row.l2_minus);
    out += ',';
    out += to_string_u128(row.ub_plus);
    out += ',';
    out += to_string_u128(row.ub_minus);
    out += ',';
    out += to_string_u128(row.k_plus);
    out += ',';
    out += to_string_u128(row.k_minus);
    out += ',';
    out += row.minus_vanished ? '1' : '0';
    out += ',';
    out += row.is_carmichael ? '1' : '0';
    return out;
}

std::string scan_footer_csv(const ScanFooter& f) {
    std::string out;
    out += "# y=" + std::to_string(f.y) + "\n";
    out += "# rows=" + std::to_string(f.rows) + " vanished=" + std::to_string(f.vanished) + "\n";
    out += "# sum_l2_plus=" + to_string_u128(f.sum_plus) + "\n";
    out += "# sum_l2_minus=" + to_string_u128(f.sum_minus) + "\n";
    out += "# sum_l2=" + to_string_u128(f.sum_plus + f.sum_minus) + "\n";
    out += "# y3_over_scriptL=" + fmt_g6(f.y3_over_script_l) + "\n";
    out += "# y_pow_3_minus_inv_alpha_plus=" + fmt_g6(f.y_pow_plus) + "\n";
    out += "# y_pow_3_minus_inv_alpha_minus=" + fmt_g6(f.y_pow_minus) + "\n";
    out += "# minus_vanishing_fraction=" + fmt_f6(f.rows == 0 ? 0.0 : (double)f.vanished / (double)f.rows) + "\n";
    return out;
}

void scan_write_csv(std::ostream& os, u64 y, const ScanOptions& opts) {
    os << scan_csv_header() << '\n';
    ScanFooter f = scan(y, opts, [&os](const ScanRow& row) { os << scan_row_csv(row) << '\n'; });
    os << scan_footer_csv(f);
}

}  // namespace frob
