// Command-line driver over the libfrob C API.

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "frob.h"
#include "json.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyMismatch = 2;
constexpr int kExitSearchExhausted = 3;
constexpr int kExitTestFail = 4;
constexpr int kExitFactorFound = 5;

int exit_for_status(frob_status st) {
    switch (st) {
        case FROB_OK: return kExitOk;
        case FROB_ENOTFOUND: return kExitSearchExhausted;
        default: return kExitUsage;
    }
}

int report_error(frob_status st) {
    std::fprintf(stderr, "error: %s\n", frob_last_error());
    return exit_for_status(st);
}

uint64_t reduce_mod(int64_t v, uint64_t n) {
    if (v >= 0) return (uint64_t)v % n;
    uint64_t m = (uint64_t)(-(v + 1)) + 1;  // |v| without overflow at INT64_MIN
    return (n - m % n) % n;
}

json outcome_json(const frob_outcome& o) {
    json j;
    switch (o.kind) {
        case FROB_PASS:
            j["outcome"] = "pass";
            j["jacobi_class"] = o.jacobi_class;
            break;
        case FROB_FAIL:
            j["outcome"] = "fail";
            j["step"] = frob_fail_step_name(o.fail_step);
            break;
        default:
            j["outcome"] = "factor_found";
            j["factor"] = o.factor;
            break;
    }
    return j;
}

struct TestArgs {
    uint64_t n = 0;
    int64_t a = 0, b = 0;
    std::string format = "human";
};

int run_test(const TestArgs& args) {
    if (args.n < 3 || args.n % 2 == 0) {
        std::fprintf(stderr, "error: n must be odd and >= 3\n");
        return kExitUsage;
    }
    uint64_t a = reduce_mod(args.a, args.n), b = reduce_mod(args.b, args.n);
    frob_trace* tr = nullptr;
    frob_status st = frob_quadratic_test_trace(args.n, a, b, &tr);
    if (st != FROB_OK) return report_error(st);
    frob_outcome o;
    frob_trace_outcome(tr, &o);
    int steps = frob_trace_steps_completed(tr);

    if (args.format == "json") {
        json j;
        j["n"] = args.n;
        j["a"] = a;
        j["b"] = b;
        j["f"] = frob_trace_poly(tr);
        j["disc_mod"] = frob_trace_disc(tr);
        j["jacobi"] = frob_trace_jacobi(tr);
        j["F1"] = frob_trace_f1(tr);
        j["F2"] = frob_trace_f2(tr);
        j["S"] = frob_trace_s(tr);
        j["steps_completed"] = steps;
        j.update(outcome_json(o));
        std::printf("%s\n", j.dump(2).c_str());
    } else {
        std::printf("f(x) = %s over Z/%" PRIu64 "Z\n", frob_trace_poly(tr), args.n);
        std::printf("disc = %" PRIu64 " (mod n), jacobi(disc, n) = %d\n", frob_trace_disc(tr),
                    frob_trace_jacobi(tr));
        std::printf("step 1 integer divisibility: %s\n", steps >= 1 ? "ok" : "FAIL");
        if (steps >= 1 && o.kind != FROB_FACTOR_FOUND) {
            std::printf("step 2 factorization: %s", steps >= 2 ? "ok" : "FAIL");
            if (frob_trace_f1(tr)[0]) std::printf("  F1 = %s", frob_trace_f1(tr));
            if (frob_trace_f2(tr)[0]) std::printf("  F2 = %s", frob_trace_f2(tr));
            std::printf("\n");
        }
        if (steps >= 2) std::printf("step 3 frobenius: %s\n", steps >= 3 ? "ok" : "FAIL");
        if (steps >= 3)
            std::printf("step 4 jacobi: %s  S = %d\n", steps >= 4 ? "ok" : "FAIL", frob_trace_s(tr));
        if (o.kind == FROB_FACTOR_FOUND)
            std::printf("euclidean algorithm split n: factor %" PRIu64 "\n", o.factor);
        char buf[64];
        if (o.kind == FROB_PASS)
            std::snprintf(buf, sizeof buf, "pass (jacobi %+d)", o.jacobi_class);
        else if (o.kind == FROB_FAIL)
            std::snprintf(buf, sizeof buf, "fail at %s", frob_fail_step_name(o.fail_step));
        else
            std::snprintf(buf, sizeof buf, "factor found: %" PRIu64, o.factor);
        std::printf("outcome: %s\n", buf);
    }
    int rc = o.kind == FROB_PASS ? kExitOk : (o.kind == FROB_FAIL ? kExitTestFail : kExitFactorFound);
    frob_trace_free(tr);
    return rc;
}

struct CountArgs {
    uint64_t n = 0;
    uint64_t seed = 0;
    std::string format = "human";
};

int run_count(const CountArgs& args) {
    int prime = 0;
    frob_status st = frob_is_prime(args.n, &prime);
    if (st != FROB_OK) return report_error(st);
    if (prime) {
        uint64_t total = 0, plus = 0, minus = 0;
        st = frob_prime_reference(args.n, &total, &plus, &minus);
        if (st != FROB_OK) return report_error(st);
        if (args.format == "json") {
            json j;
            j["n"] = args.n;
            j["prime"] = true;
            j["reference"] = {{"total", total}, {"plus", plus}, {"minus", minus}};
            std::printf("%s\n", j.dump(2).c_str());
        } else {
            std::printf("%" PRIu64 " is prime; reference counts: total=(n-1)^2=%" PRIu64
                        " plus=%" PRIu64 " minus=%" PRIu64 "\n",
                        args.n, total, plus, minus);
        }
        return kExitOk;
    }

    frob_counts c{};
    st = frob_count_liars(args.n, args.seed, &c);
    if (st != FROB_OK) return report_error(st);
    frob_factorization* f = nullptr;
    st = frob_factorize(args.n, args.seed, &f);
    if (st != FROB_OK) return report_error(st);
    if (args.format == "json") {
        json j;
        j["n"] = args.n;
        j["prime"] = false;
        j["factorization"] = frob_factorization_string(f);
        j["l2_plus"] = c.l2_plus;
        j["l2_minus"] = c.l2_minus;
        j["l2_total"] = c.l2_plus + c.l2_minus;
        j["ub_plus"] = c.ub_plus;
        j["ub_minus"] = c.ub_minus;
        j["k_plus"] = c.k_plus;
        j["k_minus"] = c.k_minus;
        j["is_carmichael"] = (bool)c.is_carmichael;
        j["is_rigid_order2"] = (bool)c.is_rigid_order2;
        j["minus_count_zero"] = (bool)c.minus_count_zero;
        std::printf("%s\n", j.dump(2).c_str());
    } else {
        std::printf("n=%" PRIu64 " = %s\n", args.n, frob_factorization_string(f));
        std::printf("L2+ = %" PRIu64 "  L2- = %" PRIu64 "  total = %" PRIu64 "\n", c.l2_plus, c.l2_minus,
                    c.l2_plus + c.l2_minus);
        std::printf("bounds: ub+ = %" PRIu64 "  ub- = %" PRIu64 "\n", c.ub_plus, c.ub_minus);
        std::printf("k+ = %" PRIu64 "  k- = %" PRIu64 "\n", c.k_plus, c.k_minus);
        std::printf("carmichael=%d rigid_order2=%d minus_vanishes=%d\n", c.is_carmichael,
                    c.is_rigid_order2, c.minus_count_zero);
    }
    frob_factorization_free(f);
    return kExitOk;
}

struct EnumArgs {
    uint64_t n = 0;
    bool list = false;
    int workers = 1;
    uint64_t cap = 0;
    std::string format = "human";
};

int run_enumerate(const EnumArgs& args) {
    frob_report* rep = nullptr;
    frob_status st = frob_enumerate(args.n, args.list ? 1 : 0, args.workers, args.cap, &rep);
    if (st != FROB_OK) return report_error(st);
    uint64_t plus = frob_report_plus(rep), minus = frob_report_minus(rep);
    if (args.format == "csv") {
        std::fputs(frob_report_liar_csv(rep), stdout);
    } else if (args.format == "json") {
        json j;
        j["n"] = args.n;
        j["plus"] = plus;
        j["minus"] = minus;
        j["total"] = plus + minus;
        json fails;
        for (int s = 0; s < 4; ++s) fails[frob_fail_step_name(s)] = frob_report_failures(rep, s);
        j["failures"] = fails;
        j["factor_events"] = frob_report_factor_events(rep);
        if (args.list) {
            json liars = json::array();
            for (size_t i = 0; i < frob_report_liar_count(rep); ++i) {
                uint64_t a = 0, b = 0;
                int jc = 0;
                frob_report_liar(rep, i, &a, &b, &jc);
                liars.push_back({{"a", a}, {"b", b}, {"jacobi_class", jc}});
            }
            j["liars"] = liars;
        }
        std::printf("%s\n", j.dump(2).c_str());
    } else {
        std::printf("n=%" PRIu64 ": L2+ = %" PRIu64 "  L2- = %" PRIu64 "  total = %" PRIu64 "\n", args.n,
                    plus, minus, plus + minus);
        for (int s = 0; s < 4; ++s)
            std::printf("fail %-21s %" PRIu64 "\n", frob_fail_step_name(s), frob_report_failures(rep, s));
        std::printf("factor events: %" PRIu64 "\n", frob_report_factor_events(rep));
        if (args.list) std::fputs(frob_report_liar_csv(rep), stdout);
    }
    frob_report_free(rep);
    return kExitOk;
}

struct ScanArgs {
    uint64_t y = 0;
    int workers = 1;
    std::string format = "csv";
    double alpha_plus = 23.0 / 8.0;
    double alpha_minus = 4.0 / 3.0;
    uint64_t seed = 0;
};

int run_scan(const ScanArgs& args) {
    frob_scan* s = nullptr;
    frob_status st = frob_scan_create(args.y, args.workers, args.alpha_plus, args.alpha_minus, args.seed, &s);
    if (st != FROB_OK) return report_error(st);
    frob_scan_row_view row{};
    if (args.format == "json") {
        json rows = json::array();
        while (frob_scan_next(s, &row)) {
            rows.push_back({{"n", row.n},
                            {"factorization", row.factorization},
                            {"l2_plus", row.l2_plus},
                            {"l2_minus", row.l2_minus},
                            {"ub_plus", row.ub_plus},
                            {"ub_minus", row.ub_minus},
                            {"k_plus", row.k_plus},
                            {"k_minus", row.k_minus},
                            {"minus_vanished", (bool)row.minus_vanished},
                            {"is_carmichael", (bool)row.is_carmichael}});
        }
        frob_scan_footer_view fv{};
        frob_scan_get_footer(s, &fv);
        json j;
        j["y"] = args.y;
        j["rows"] = rows;
        j["footer"] = {{"sum_l2_plus", fv.sum_plus},
                       {"sum_l2_minus", fv.sum_minus},
                       {"sum_l2", fv.sum_total},
                       {"rows", fv.rows},
                       {"vanished", fv.vanished},
                       {"y3_over_scriptL", fv.y3_over_script_l},
                       {"y_pow_3_minus_inv_alpha_plus", fv.y_pow_plus},
                       {"y_pow_3_minus_inv_alpha_minus", fv.y_pow_minus}};
        std::printf("%s\n", j.dump(2).c_str());
    } else {
        std::printf("%s\n", frob_scan_csv_header());
        while (frob_scan_next(s, &row)) std::printf("%s\n", row.csv_line);
        frob_scan_footer_view fv{};
        frob_scan_get_footer(s, &fv);
        std::fputs(fv.csv_block, stdout);
    }
    frob_scan_free(s);
    return kExitOk;
}

struct ChallengeArgs {
    uint64_t y = 0;
    int64_t a = 5, b = 5;
    std::string format = "human";
};

int run_challenge(const ChallengeArgs& args) {
    frob_u64_list* hits = nullptr;
    frob_status st = frob_challenge(args.y, args.a, args.b, &hits);
    if (st != FROB_OK) return report_error(st);
    size_t count = frob_u64_list_size(hits);
    if (args.format == "json") {
        json j;
        j["y"] = args.y;
        j["a"] = args.a;
        j["b"] = args.b;
        json list = json::array();
        for (size_t i = 0; i < count; ++i) list.push_back(frob_u64_list_get(hits, i));
        j["count"] = count;
        j["hits"] = list;
        std::printf("%s\n", j.dump(2).c_str());
    } else {
        std::printf("composites n <= %" PRIu64 " passing x^2%+" PRId64 "x%+" PRId64
                    " with jacobi(disc, n) = -1: %zu\n",
                    args.y, args.a, args.b, count);
        for (size_t i = 0; i < count; ++i) std::printf("%" PRIu64 "\n", frob_u64_list_get(hits, i));
    }
    frob_u64_list_free(hits);
    return kExitOk;
}

struct ConstructArgs {
    uint64_t s = 0, M = 0, M1 = 0, M2 = 0, l1 = 0, l2 = 0;
    uint64_t cap = 0;
    double x = 0;
    std::vector<uint64_t> targets;
    std::string format = "human";
};

int run_construct_plus(ConstructArgs& args) {
    if (args.M == 0 && args.x > 0) {
        // derive M from a nominal x: B = floor(log x / loglog x), M = lcm(1..B)
        double lg = std::log(args.x), llg = std::log(lg);
        if (!(llg > 0)) {
            std::fprintf(stderr, "error: x too small to derive M\n");
            return kExitUsage;
        }
        uint64_t B = (uint64_t)(lg / llg);
        frob_status st = frob_lcm_upto(B < 1 ? 1 : B, &args.M);
        if (st != FROB_OK) return report_error(st);
    }
    frob_recipe* r = nullptr;
    frob_status st = frob_construct_plus(args.s, args.M, args.cap, &r);
    if (st != FROB_OK) return report_error(st);
    std::printf("%s\n", frob_recipe_line(r));
    int ok = frob_recipe_verified_ok(r);
    if (!ok) std::fprintf(stderr, "error: verified count below the predicted lower bound\n");
    frob_recipe_free(r);
    return ok ? kExitOk : kExitVerifyMismatch;
}

int run_construct_minus(const ConstructArgs& args) {
    frob_recipe* r = nullptr;
    frob_status st = frob_construct_minus(args.s, args.M1, args.M2, args.l1, args.l2, args.cap, &r);
    if (st != FROB_OK) return report_error(st);
    std::printf("%s\n", frob_recipe_line(r));
    int ok = frob_recipe_verified_ok(r);
    if (!ok) std::fprintf(stderr, "error: verified count below the predicted lower bound\n");
    frob_recipe_free(r);
    return ok ? kExitOk : kExitVerifyMismatch;
}

int run_construct_split(const ConstructArgs& args) {
    uint64_t M1 = 0, M2 = 0;
    frob_status st = frob_split_search(args.M, args.targets.data(), args.targets.size(), &M1, &M2);
    if (st != FROB_OK) return report_error(st);
    std::printf("M=%" PRIu64 " M1=%" PRIu64 " M2=%" PRIu64 "\n", args.M, M1, M2);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quadratic Frobenius pseudoprime toolkit"};
    app.require_subcommand(1);

    TestArgs test_args;
    auto* cmd_test = app.add_subcommand("test", "run the degree-2 test on one (n, a, b)");
    cmd_test->add_option("n", test_args.n, "odd modulus")->required();
    cmd_test->add_option("a", test_args.a, "coefficient of x (reduced mod n)")->required();
    cmd_test->add_option("b", test_args.b, "constant term (reduced mod n)")->required();
    cmd_test->add_option("--format", test_args.format)->check(CLI::IsMember({"human", "json"}));

    CountArgs count_args;
    auto* cmd_count = app.add_subcommand("count", "exact liar counts via the closed-form formulas");
    cmd_count->add_option("n", count_args.n, "odd integer")->required();
    cmd_count->add_option("--seed", count_args.seed, "factorization seed");
    cmd_count->add_option("--format", count_args.format)->check(CLI::IsMember({"human", "json"}));

    EnumArgs enum_args;
    auto* cmd_enum = app.add_subcommand("enumerate", "brute-force oracle over all monic quadratics mod n");
    cmd_enum->add_option("n", enum_args.n, "odd integer")->required();
    cmd_enum->add_flag("--list", enum_args.list, "keep and print the liar list");
    cmd_enum->add_option("--workers", enum_args.workers);
    cmd_enum->add_option("--cap", enum_args.cap, "enumeration cap (default 5000)");
    cmd_enum->add_option("--format", enum_args.format)->check(CLI::IsMember({"human", "json", "csv"}));

    ScanArgs scan_args;
    auto* cmd_scan = app.add_subcommand("scan", "formula scan over odd composites up to y");
    cmd_scan->add_option("--y", scan_args.y)->required();
    cmd_scan->add_option("--workers", scan_args.workers);
    cmd_scan->add_option("--format", scan_args.format)->check(CLI::IsMember({"csv", "json"}));
    cmd_scan->add_option("--alpha-plus", scan_args.alpha_plus);
    cmd_scan->add_option("--alpha-minus", scan_args.alpha_minus);
    cmd_scan->add_option("--seed", scan_args.seed);

    ChallengeArgs chal_args;
    auto* cmd_chal = app.add_subcommand("challenge", "search composites passing with jacobi(disc, n) = -1");
    cmd_chal->add_option("--y", chal_args.y)->required();
    cmd_chal->add_option("--a", chal_args.a, "coefficient of x (default 5)");
    cmd_chal->add_option("--b", chal_args.b, "constant term (default 5)");
    cmd_chal->add_option("--format", chal_args.format)->check(CLI::IsMember({"human", "json"}));

    ConstructArgs cons_args;
    auto* cmd_cons = app.add_subcommand("construct", "build composites with provably many liars");
    cmd_cons->require_subcommand(1);
    auto* cons_plus = cmd_cons->add_subcommand("plus", "n = s*q with sq = 1 mod M");
    cons_plus->add_option("--s", cons_args.s)->required();
    cons_plus->add_option("--M", cons_args.M);
    cons_plus->add_option("--x", cons_args.x, "derive M from a nominal x");
    cons_plus->add_option("--cap", cons_args.cap, "candidate budget");
    auto* cons_minus = cmd_cons->add_subcommand("minus", "n = s*q1*q2 with n = 1 mod M1, -1 mod M2");
    cons_minus->add_option("--s", cons_args.s)->required();
    cons_minus->add_option("--M1", cons_args.M1)->required();
    cons_minus->add_option("--M2", cons_args.M2)->required();
    cons_minus->add_option("--l1", cons_args.l1);
    cons_minus->add_option("--l2", cons_args.l2);
    cons_minus->add_option("--cap", cons_args.cap);
    auto* cons_split = cmd_cons->add_subcommand("split", "factor M = M1*M2 with gcd 2 covering the targets");
    cons_split->add_option("--M", cons_args.M)->required();
    cons_split->add_option("--targets", cons_args.targets, "target primes")->required()->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (cmd_test->parsed()) return run_test(test_args);
    if (cmd_count->parsed()) return run_count(count_args);
    if (cmd_enum->parsed()) return run_enumerate(enum_args);
    if (cmd_scan->parsed()) return run_scan(scan_args);
    if (cmd_chal->parsed()) return run_challenge(chal_args);
    if (cmd_cons->parsed()) {
        if (cons_plus->parsed()) return run_construct_plus(cons_args);
        if (cons_minus->parsed()) return run_construct_minus(cons_args);
        if (cons_split->parsed()) return run_construct_split(cons_args);
    }
    return kExitUsage;
}
