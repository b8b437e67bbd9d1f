#include "frob.h"

#include <cstring>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "frob/arith.hpp"
#include "frob/construct.hpp"
#include "frob/enumerate.hpp"
#include "frob/frobtest.hpp"
#include "frob/liarcount.hpp"
#include "frob/polymod.hpp"
#include "frob/scan.hpp"

using namespace frob;

namespace {

thread_local std::string g_last_error;

template <typename Fn>
frob_status wrap(Fn&& fn) {
    try {
        fn();
        return FROB_OK;
    } catch (const SearchExhausted& e) {
        g_last_error = e.what();
        return FROB_ENOTFOUND;
    } catch (const std::overflow_error& e) {
        g_last_error = e.what();
        return FROB_ERANGE;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return FROB_EINVAL;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return FROB_EINVAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FROB_EINTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return FROB_EINTERNAL;
    }
}

frob_outcome to_c(const FrobeniusOutcome& o) {
    frob_outcome c{};
    switch (o.kind) {
        case FrobeniusOutcome::Kind::Pass:
            c.kind = FROB_PASS;
            c.jacobi_class = o.jacobi_class;
            break;
        case FrobeniusOutcome::Kind::Fail:
            c.kind = FROB_FAIL;
            c.fail_step = (int)o.step;
            break;
        case FrobeniusOutcome::Kind::FactorFound:
            c.kind = FROB_FACTOR_FOUND;
            c.factor = o.factor;
            break;
    }
    return c;
}

u64 fit_u64(u128 v, const char* what) {
    if (v > (u128)UINT64_MAX) throw std::overflow_error(std::string(what) + ": value exceeds 64 bits");
    return (u64)v;
}

u64 seed_or_default(u64 seed) { return seed == 0 ? kDefaultFactorSeed : seed; }

}  // namespace

struct frob_factorization {
    Factorization f;
    std::string text;
};

struct frob_trace {
    Frobenius2Trace t;
    std::string poly_text, f1_text, f2_text;
};

struct frob_report {
    EnumerationReport r;
    std::string csv;
};

struct frob_u64_list {
    std::vector<u64> v;
};

struct frob_recipe {
    ConstructionRecipe r;
    std::string predicted_text, verified_text, line_text;
    bool verified_ok = false;
};

struct frob_scan {
    std::vector<ScanRow> rows;
    ScanFooter footer;
    size_t next = 0;
    std::string fact_text, csv_text;
    std::string sum_plus, sum_minus, sum_total, footer_block;
};

extern "C" {

const char* frob_version(void) { return "1.0.0"; }

const char* frob_last_error(void) { return g_last_error.c_str(); }

frob_status frob_jacobi(int64_t a, uint64_t n, int* out) {
    return wrap([&] { *out = jacobi((i128)a, n); });
}

frob_status frob_is_prime(uint64_t n, int* out) {
    return wrap([&] { *out = is_prime(n) ? 1 : 0; });
}

frob_status frob_lcm_upto(uint64_t B, uint64_t* out) {
    return wrap([&] { *out = lcm_upto(B); });
}

frob_status frob_crt(const uint64_t* values, const uint64_t* moduli, size_t count, uint64_t* value,
                     uint64_t* modulus) {
    return wrap([&] {
        std::vector<std::pair<u64, u64>> rs(count);
        for (size_t i = 0; i < count; ++i) rs[i] = {values[i], moduli[i]};
        CrtResult r = crt(rs);
        *value = r.value;
        *modulus = r.modulus;
    });
}

frob_status frob_factorize(uint64_t n, uint64_t seed, frob_factorization** out) {
    return wrap([&] {
        auto* h = new frob_factorization{factorize(n, seed_or_default(seed)), {}};
        h->text = h->f.to_string();
        *out = h;
    });
}

size_t frob_factorization_size(const frob_factorization* f) { return f->f.factors.size(); }
uint64_t frob_factorization_prime(const frob_factorization* f, size_t i) { return f->f.factors[i].first; }
int frob_factorization_exponent(const frob_factorization* f, size_t i) { return f->f.factors[i].second; }
const char* frob_factorization_string(const frob_factorization* f) { return f->text.c_str(); }
void frob_factorization_free(frob_factorization* f) { delete f; }

const char* frob_fail_step_name(int step) {
    if (step < 0 || step > 3) return "?";
    return fail_step_name((FailStep)step);
}

frob_status frob_quadratic_test(uint64_t n, uint64_t a, uint64_t b, frob_outcome* out) {
    return wrap([&] { *out = to_c(frobenius2_test(n, MonicQuadratic::make(n, a, b))); });
}

frob_status frob_quadratic_local_check(uint64_t n, uint64_t a, uint64_t b, frob_outcome* out) {
    return wrap([&] {
        Factorization nf = factorize(n);
        *out = to_c(frobenius2_local_check(nf, MonicQuadratic::make(n, a, b)));
    });
}

frob_status frob_quadratic_test_trace(uint64_t n, uint64_t a, uint64_t b, frob_trace** out) {
    return wrap([&] {
        MonicQuadratic f = MonicQuadratic::make(n, a, b);
        auto* h = new frob_trace{frobenius2_test_trace(n, f), {}, {}, {}};
        h->poly_text = poly_to_string(f.poly());
        if (h->t.have_chain || h->t.factor_stage == 2) h->f1_text = poly_to_string(h->t.F1);
        if (h->t.have_chain) h->f2_text = poly_to_string(h->t.F2);
        *out = h;
    });
}

void frob_trace_outcome(const frob_trace* t, frob_outcome* out) { *out = to_c(t->t.outcome); }
const char* frob_trace_poly(const frob_trace* t) { return t->poly_text.c_str(); }
const char* frob_trace_f1(const frob_trace* t) { return t->f1_text.c_str(); }
const char* frob_trace_f2(const frob_trace* t) { return t->f2_text.c_str(); }
uint64_t frob_trace_disc(const frob_trace* t) { return t->t.disc_mod; }
int frob_trace_jacobi(const frob_trace* t) { return t->t.jacobi_symbol; }
int frob_trace_s(const frob_trace* t) { return t->t.S; }
int frob_trace_steps_completed(const frob_trace* t) { return t->t.steps_completed; }
void frob_trace_free(frob_trace* t) { delete t; }

frob_status frob_degree_d_test(uint64_t n, const uint64_t* coeffs, size_t len, frob_outcome* out) {
    return wrap([&] {
        PolyMod f = PolyMod::from_coeffs(n, std::vector<u64>(coeffs, coeffs + len));
        *out = to_c(frobenius_d_test(n, f));
    });
}

frob_status frob_count_liars(uint64_t n, uint64_t seed, frob_counts* out) {
    return wrap([&] {
        Factorization nf = factorize(n, seed_or_default(seed));
        frob_counts c{};
        c.l2_plus = fit_u64(count_plus(nf), "l2_plus");
        c.l2_minus = fit_u64(count_minus(nf), "l2_minus");
        UpperBounds ub = upper_bounds(nf);
        c.ub_plus = fit_u64(ub.plus, "ub_plus");
        c.ub_minus = fit_u64(ub.minus, "ub_minus");
        LambdaStats ls = lambda_stats(nf);
        c.k_plus = fit_u64(ls.k_plus, "k_plus");
        c.k_minus = fit_u64(ls.k_minus, "k_minus");
        VanishingFlags vf = vanishing_predicates(nf);
        c.is_carmichael = vf.is_carmichael;
        c.is_rigid_order2 = vf.is_rigid_order2;
        c.minus_count_zero = vf.minus_count_zero;
        *out = c;
    });
}

frob_status frob_prime_reference(uint64_t p, uint64_t* total, uint64_t* plus, uint64_t* minus) {
    return wrap([&] {
        PrimeReference r = prime_reference(p);
        *total = fit_u64(r.total, "total");
        *plus = fit_u64(r.plus, "plus");
        *minus = fit_u64(r.minus, "minus");
    });
}

frob_status frob_enumerate(uint64_t n, int keep_list, int workers, uint64_t cap, frob_report** out) {
    return wrap([&] {
        auto* h = new frob_report{enumerate_liars(n, keep_list != 0, workers,
                                                  cap == 0 ? kDefaultEnumerationCap : cap),
                                  {}};
        std::ostringstream os;
        write_liar_csv(os, h->r);
        h->csv = os.str();
        *out = h;
    });
}

uint64_t frob_report_plus(const frob_report* r) { return (u64)r->r.counts.plus; }
uint64_t frob_report_minus(const frob_report* r) { return (u64)r->r.counts.minus; }
uint64_t frob_report_failures(const frob_report* r, int step) {
    return (step < 0 || step > 3) ? 0 : r->r.failures_by_step[(size_t)step];
}
uint64_t frob_report_factor_events(const frob_report* r) { return r->r.factor_events; }
size_t frob_report_liar_count(const frob_report* r) { return r->r.liars.size(); }

frob_status frob_report_liar(const frob_report* r, size_t i, uint64_t* a, uint64_t* b, int* jacobi_class) {
    return wrap([&] {
        if (i >= r->r.liars.size()) throw std::invalid_argument("liar index out of range");
        *a = r->r.liars[i].a;
        *b = r->r.liars[i].b;
        *jacobi_class = r->r.liars[i].jacobi_class;
    });
}

const char* frob_report_liar_csv(const frob_report* r) { return r->csv.c_str(); }
void frob_report_free(frob_report* r) { delete r; }

size_t frob_u64_list_size(const frob_u64_list* l) { return l->v.size(); }
uint64_t frob_u64_list_get(const frob_u64_list* l, size_t i) { return i < l->v.size() ? l->v[i] : 0; }
void frob_u64_list_free(frob_u64_list* l) { delete l; }

frob_status frob_fermat_liars(uint64_t n, frob_u64_list** out) {
    return wrap([&] { *out = new frob_u64_list{fermat_liars(n)}; });
}

frob_status frob_p_set_plus(uint64_t M, uint64_t bound, frob_u64_list** out) {
    return wrap([&] { *out = new frob_u64_list{p_set_plus(M, bound)}; });
}

frob_status frob_p_set_minus(uint64_t M, uint64_t bound, frob_u64_list** out) {
    return wrap([&] { *out = new frob_u64_list{p_set_minus(M, bound)}; });
}

frob_status frob_p_set_split(uint64_t M1, uint64_t M2, uint64_t bound, frob_u64_list** out) {
    return wrap([&] { *out = new frob_u64_list{p_set_split(M1, M2, bound)}; });
}

frob_status frob_s_set_sample(const uint64_t* pset, size_t len, int k, uint64_t cutoff, size_t limit,
                              frob_u64_list** out) {
    return wrap([&] {
        std::vector<u64> ps(pset, pset + len);
        *out = new frob_u64_list{s_set_sample(ps, k, cutoff, limit)};
    });
}

frob_status frob_challenge(uint64_t y, int64_t a, int64_t b, frob_u64_list** hits) {
    return wrap([&] {
        std::vector<u64> found;
        for (u64 n = 9; n <= y; n += 2) {
            if (is_prime(n)) continue;
            u64 ar = a >= 0 ? (u64)a % n : n - ((u64)(-a) % n);
            u64 br = b >= 0 ? (u64)b % n : n - ((u64)(-b) % n);
            MonicQuadratic f = MonicQuadratic::make(n, ar % n, br % n);
            if (f.jacobi_class != -1) continue;
            if (!frobenius2_test(n, f).passed()) continue;
            if (!frobenius2_local_check(factorize(n), f).passed())
                throw std::logic_error("challenge: the two test paths disagree at n=" + std::to_string(n));
            found.push_back(n);
        }
        *hits = new frob_u64_list{std::move(found)};
    });
}

frob_status frob_split_search(uint64_t M, const uint64_t* targets, size_t len, uint64_t* M1, uint64_t* M2) {
    frob_status st = FROB_OK;
    frob_status rc = wrap([&] {
        std::vector<u64> t(targets, targets + len);
        SplitSearchResult r = split_search(M, t);
        switch (r.status) {
            case SplitSearchResult::Status::Found:
                *M1 = r.M1;
                *M2 = r.M2;
                break;
            case SplitSearchResult::Status::Inconsistent:
                g_last_error = "split_search inconsistent: " + r.detail;
                st = FROB_EINVAL;
                break;
            case SplitSearchResult::Status::Exhausted:
                g_last_error = "split_search exhausted: " + r.detail;
                st = FROB_ENOTFOUND;
                break;
        }
    });
    return rc != FROB_OK ? rc : st;
}

namespace {

frob_recipe* finish_recipe(ConstructionRecipe&& r) {
    auto* h = new frob_recipe{std::move(r), {}, {}, {}, false};
    Factorization nf = factorize(h->r.n);
    u128 verified = h->r.kind == ConstructionRecipe::Kind::Plus ? count_plus(nf) : count_minus(nf);
    h->predicted_text = to_string_u128(h->r.predicted_lower_bound);
    h->verified_text = to_string_u128(verified);
    h->verified_ok = verified >= h->r.predicted_lower_bound;
    h->line_text = h->r.to_line(verified);
    return h;
}

}  // namespace

frob_status frob_construct_plus(uint64_t s, uint64_t M, uint64_t search_cap, frob_recipe** out) {
    return wrap([&] {
        ConstructionParams params;
        params.search_cap = search_cap;
        *out = finish_recipe(construct_plus(s, M, params));
    });
}

frob_status frob_construct_minus(uint64_t s, uint64_t M1, uint64_t M2, uint64_t l1, uint64_t l2,
                                 uint64_t search_cap, frob_recipe** out) {
    return wrap([&] {
        ConstructionParams params;
        params.search_cap = search_cap;
        *out = finish_recipe(construct_minus(s, M1, M2, l1, l2, params));
    });
}

uint64_t frob_recipe_n(const frob_recipe* r) { return r->r.n; }
uint64_t frob_recipe_q1(const frob_recipe* r) { return r->r.q1; }
uint64_t frob_recipe_q2(const frob_recipe* r) { return r->r.q2; }
const char* frob_recipe_predicted(const frob_recipe* r) { return r->predicted_text.c_str(); }
const char* frob_recipe_verified(const frob_recipe* r) { return r->verified_text.c_str(); }
int frob_recipe_verified_ok(const frob_recipe* r) { return r->verified_ok ? 1 : 0; }
const char* frob_recipe_line(const frob_recipe* r) { return r->line_text.c_str(); }
void frob_recipe_free(frob_recipe* r) { delete r; }

frob_status frob_script_l(double y, double* out) {
    return wrap([&] { *out = script_L(y); });
}

frob_status frob_scan_create(uint64_t y, int workers, double alpha_plus, double alpha_minus, uint64_t seed,
                             frob_scan** out) {
    return wrap([&] {
        auto* h = new frob_scan{};
        ScanOptions opts;
        opts.workers = workers;
        if (alpha_plus > 0) opts.alpha_plus = alpha_plus;
        if (alpha_minus > 0) opts.alpha_minus = alpha_minus;
        opts.seed = seed_or_default(seed);
        h->footer = scan(y, opts, [h](const ScanRow& row) { h->rows.push_back(row); });
        h->sum_plus = to_string_u128(h->footer.sum_plus);
        h->sum_minus = to_string_u128(h->footer.sum_minus);
        h->sum_total = to_string_u128(h->footer.sum_plus + h->footer.sum_minus);
        h->footer_block = scan_footer_csv(h->footer);
        *out = h;
    });
}

const char* frob_scan_csv_header(void) {
    static const std::string header = scan_csv_header();
    return header.c_str();
}

int frob_scan_next(frob_scan* s, frob_scan_row_view* row) {
    if (s->next >= s->rows.size()) return 0;
    const ScanRow& r = s->rows[s->next++];
    s->fact_text = r.fact.to_string();
    s->csv_text = scan_row_csv(r);
    row->n = r.n;
    row->factorization = s->fact_text.c_str();
    row->l2_plus = (u64)r.l2_plus;
    row->l2_minus = (u64)r.l2_minus;
    row->ub_plus = (u64)r.ub_plus;
    row->ub_minus = (u64)r.ub_minus;
    row->k_plus = (u64)r.k_plus;
    row->k_minus = (u64)r.k_minus;
    row->minus_vanished = r.minus_vanished;
    row->is_carmichael = r.is_carmichael;
    row->csv_line = s->csv_text.c_str();
    return 1;
}

frob_status frob_scan_get_footer(frob_scan* s, frob_scan_footer_view* out) {
    return wrap([&] {
        out->sum_plus = s->sum_plus.c_str();
        out->sum_minus = s->sum_minus.c_str();
        out->sum_total = s->sum_total.c_str();
        out->rows = s->footer.rows;
        out->vanished = s->footer.vanished;
        out->y3_over_script_l = s->footer.y3_over_script_l;
        out->y_pow_plus = s->footer.y_pow_plus;
        out->y_pow_minus = s->footer.y_pow_minus;
        out->csv_block = s->footer_block.c_str();
    });
}

void frob_scan_free(frob_scan* s) { delete s; }

}  // extern "C"
