/*
 * C API for the quadratic Frobenius pseudoprime toolkit.
 *
 * All functions return frob_status; results come back through out-parameters
 * or opaque handles. Every handle has a matching _free function. String
 * pointers returned from a handle stay valid until the handle is freed (scan
 * row strings stay valid until the next frob_scan_next call). On any failure
 * frob_last_error() carries a thread-local message.
 */
#ifndef FROB_H
#define FROB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FROB_API __declspec(dllexport)
#else
#define FROB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum frob_status {
    FROB_OK = 0,
    FROB_EINVAL = 1,    /* precondition violated / inconsistent input */
    FROB_ERANGE = 2,    /* value does not fit the requested width */
    FROB_ENOTFOUND = 3, /* search exhausted */
    FROB_EINTERNAL = 4  /* internal consistency failure */
} frob_status;

FROB_API const char* frob_version(void);
FROB_API const char* frob_last_error(void);

/* ---- integer utilities ---- */

FROB_API frob_status frob_jacobi(int64_t a, uint64_t n, int* out);
FROB_API frob_status frob_is_prime(uint64_t n, int* out);
FROB_API frob_status frob_lcm_upto(uint64_t B, uint64_t* out);
FROB_API frob_status frob_crt(const uint64_t* values, const uint64_t* moduli, size_t count,
                              uint64_t* value, uint64_t* modulus);

typedef struct frob_factorization frob_factorization;
/* seed 0 selects the library default; any other value drives the splitting
 * stage deterministically. */
FROB_API frob_status frob_factorize(uint64_t n, uint64_t seed, frob_factorization** out);
FROB_API size_t frob_factorization_size(const frob_factorization* f);
FROB_API uint64_t frob_factorization_prime(const frob_factorization* f, size_t i);
FROB_API int frob_factorization_exponent(const frob_factorization* f, size_t i);
FROB_API const char* frob_factorization_string(const frob_factorization* f);
FROB_API void frob_factorization_free(frob_factorization* f);

/* ---- Frobenius tests ---- */

enum { FROB_PASS = 0, FROB_FAIL = 1, FROB_FACTOR_FOUND = 2 };
enum {
    FROB_STEP_INTEGER_DIVISIBILITY = 0,
    FROB_STEP_FACTORIZATION = 1,
    FROB_STEP_FROBENIUS = 2,
    FROB_STEP_JACOBI = 3
};

typedef struct frob_outcome {
    int kind;         /* FROB_PASS / FROB_FAIL / FROB_FACTOR_FOUND */
    int jacobi_class; /* +-1 when kind == FROB_PASS */
    int fail_step;    /* FROB_STEP_* when kind == FROB_FAIL */
    uint64_t factor;  /* proper divisor of n when kind == FROB_FACTOR_FOUND */
} frob_outcome;

FROB_API const char* frob_fail_step_name(int step);

/* x^2 + ax + b against odd n >= 3; a, b taken mod n. */
FROB_API frob_status frob_quadratic_test(uint64_t n, uint64_t a, uint64_t b, frob_outcome* out);
/* Independent per-prime-power evaluation of the same conditions. */
FROB_API frob_status frob_quadratic_local_check(uint64_t n, uint64_t a, uint64_t b, frob_outcome* out);

typedef struct frob_trace frob_trace;
FROB_API frob_status frob_quadratic_test_trace(uint64_t n, uint64_t a, uint64_t b, frob_trace** out);
FROB_API void frob_trace_outcome(const frob_trace* t, frob_outcome* out);
FROB_API const char* frob_trace_poly(const frob_trace* t);
FROB_API const char* frob_trace_f1(const frob_trace* t); /* "" when the chain was not reached */
FROB_API const char* frob_trace_f2(const frob_trace* t);
FROB_API uint64_t frob_trace_disc(const frob_trace* t);
FROB_API int frob_trace_jacobi(const frob_trace* t);
FROB_API int frob_trace_s(const frob_trace* t);
FROB_API int frob_trace_steps_completed(const frob_trace* t);
FROB_API void frob_trace_free(frob_trace* t);

/* Monic polynomial of degree len-1, coefficients constant-first, leading 1. */
FROB_API frob_status frob_degree_d_test(uint64_t n, const uint64_t* coeffs, size_t len, frob_outcome* out);

/* ---- liar counting (formula path) ---- */

typedef struct frob_counts {
    uint64_t l2_plus, l2_minus;
    uint64_t ub_plus, ub_minus;
    uint64_t k_plus, k_minus;
    int is_carmichael, is_rigid_order2, minus_count_zero;
} frob_counts;

/* Odd composite n; FROB_ERANGE when a count exceeds 64 bits. */
FROB_API frob_status frob_count_liars(uint64_t n, uint64_t seed, frob_counts* out);
/* Closed forms for odd prime p: total (p-1)^2, plus (p-1)(p-2)/2, minus p(p-1)/2. */
FROB_API frob_status frob_prime_reference(uint64_t p, uint64_t* total, uint64_t* plus, uint64_t* minus);

/* ---- enumeration oracle ---- */

typedef struct frob_report frob_report;
FROB_API frob_status frob_enumerate(uint64_t n, int keep_list, int workers, uint64_t cap, frob_report** out);
FROB_API uint64_t frob_report_plus(const frob_report* r);
FROB_API uint64_t frob_report_minus(const frob_report* r);
FROB_API uint64_t frob_report_failures(const frob_report* r, int step);
FROB_API uint64_t frob_report_factor_events(const frob_report* r);
FROB_API size_t frob_report_liar_count(const frob_report* r);
FROB_API frob_status frob_report_liar(const frob_report* r, size_t i, uint64_t* a, uint64_t* b, int* jacobi_class);
/* CSV liar list, columns n,a,b,jacobi_class; valid until the report is freed. */
FROB_API const char* frob_report_liar_csv(const frob_report* r);
FROB_API void frob_report_free(frob_report* r);

/* ---- generic u64 list handle ---- */

typedef struct frob_u64_list frob_u64_list;
FROB_API size_t frob_u64_list_size(const frob_u64_list* l);
FROB_API uint64_t frob_u64_list_get(const frob_u64_list* l, size_t i);
FROB_API void frob_u64_list_free(frob_u64_list* l);

FROB_API frob_status frob_fermat_liars(uint64_t n, frob_u64_list** out);
FROB_API frob_status frob_p_set_plus(uint64_t M, uint64_t bound, frob_u64_list** out);
FROB_API frob_status frob_p_set_minus(uint64_t M, uint64_t bound, frob_u64_list** out);
FROB_API frob_status frob_p_set_split(uint64_t M1, uint64_t M2, uint64_t bound, frob_u64_list** out);
FROB_API frob_status frob_s_set_sample(const uint64_t* pset, size_t len, int k, uint64_t cutoff,
                                       size_t limit, frob_u64_list** out);

/* Composite n <= y with jacobi(a^2-4b, n) = -1 passing the test for
 * x^2 + ax + b; every hit is re-verified through the local-check path. */
FROB_API frob_status frob_challenge(uint64_t y, int64_t a, int64_t b, frob_u64_list** hits);

/* ---- constructions ---- */

/* FROB_OK found; FROB_EINVAL inconsistent targets; FROB_ENOTFOUND exhausted. */
FROB_API frob_status frob_split_search(uint64_t M, const uint64_t* targets, size_t len,
                                       uint64_t* M1, uint64_t* M2);

typedef struct frob_recipe frob_recipe;
FROB_API frob_status frob_construct_plus(uint64_t s, uint64_t M, uint64_t search_cap, frob_recipe** out);
FROB_API frob_status frob_construct_minus(uint64_t s, uint64_t M1, uint64_t M2, uint64_t l1, uint64_t l2,
                                          uint64_t search_cap, frob_recipe** out);
FROB_API uint64_t frob_recipe_n(const frob_recipe* r);
FROB_API uint64_t frob_recipe_q1(const frob_recipe* r);
FROB_API uint64_t frob_recipe_q2(const frob_recipe* r);
FROB_API const char* frob_recipe_predicted(const frob_recipe* r); /* decimal */
FROB_API const char* frob_recipe_verified(const frob_recipe* r);  /* decimal, matching Jacobi class */
FROB_API int frob_recipe_verified_ok(const frob_recipe* r);       /* verified >= predicted */
FROB_API const char* frob_recipe_line(const frob_recipe* r);
FROB_API void frob_recipe_free(frob_recipe* r);

FROB_API frob_status frob_script_l(double y, double* out);

/* ---- range scan ---- */

typedef struct frob_scan frob_scan;

typedef struct frob_scan_row_view {
    uint64_t n;
    const char* factorization;
    uint64_t l2_plus, l2_minus, ub_plus, ub_minus, k_plus, k_minus;
    int minus_vanished, is_carmichael;
    const char* csv_line;
} frob_scan_row_view;

typedef struct frob_scan_footer_view {
    const char* sum_plus;
    const char* sum_minus;
    const char* sum_total;
    uint64_t rows, vanished;
    double y3_over_script_l, y_pow_plus, y_pow_minus;
    const char* csv_block;
} frob_scan_footer_view;

FROB_API frob_status frob_scan_create(uint64_t y, int workers, double alpha_plus, double alpha_minus,
                                      uint64_t seed, frob_scan** out);
FROB_API const char* frob_scan_csv_header(void);
/* Returns 1 and fills the view while rows remain, 0 at the end. Row strings
 * stay valid until the next call on the same handle. */
FROB_API int frob_scan_next(frob_scan* s, frob_scan_row_view* row);
FROB_API frob_status frob_scan_get_footer(frob_scan* s, frob_scan_footer_view* out);
FROB_API void frob_scan_free(frob_scan* s);

#ifdef __cplusplus
}
#endif

#endif /* FROB_H */
