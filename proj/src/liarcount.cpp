#include "frob/liarcount.hpp"

#include <algorithm>
#include <stdexcept>

namespace frob {

namespace {

void require_odd_composite(const Factorization& nf, const char* who) {
    if (nf.n < 9 || nf.n % 2 == 0 || nf.is_prime_input())
        throw std::invalid_argument(std::string(who) + ": n must be odd composite");
    if (nf.product() != nf.n) throw std::invalid_argument(std::string(who) + ": factorization product mismatch");
}

u128 half_even(u128 big, u128 small, const char* what) {
    if (big < small) throw std::logic_error(std::string("local count negative: ") + what);
    u128 d = big - small;
    if (d % 2 != 0) throw std::logic_error(std::string("local count parity violation: ") + what);
    return d / 2;
}

}  // namespace

LocalLiarCounts local_counts(u64 n, u64 p) {
    if (n % 2 == 0 || n < 3) throw std::invalid_argument("local_counts: n must be odd");
    if (p < 3 || n % p != 0 || !is_prime(p)) throw std::invalid_argument("local_counts: p must be an odd prime dividing n");
    const u128 n1 = (u128)n - 1;
    const u128 n2 = (u128)n * n - 1;
    const u128 p1 = (u128)p - 1;
    const u128 p2 = (u128)p * p - 1;
    const u128 np = (u128)n - p;

    const u128 g_n1p1 = gcd128(n1, p1);
    LocalLiarCounts c;
    c.lpp = half_even(g_n1p1 * g_n1p1, g_n1p1, "lpp");
    c.lpm = half_even(gcd128(n1, p2), g_n1p1, "lpm");
    c.lmp = half_even(gcd128(n2, p1), g_n1p1, "lmp");
    c.lmm = half_even(gcd128(gcd128(p2, n2), np), g_n1p1, "lmm");
    return c;
}

namespace {

// Shared by count_plus/count_minus: A = prod over all i of (a_i + b_i),
// B = prod over even-exponent i of (a_i + b_i) times prod over odd-exponent i
// of (a_i - b_i). Plus combines (A+B)/2, minus (A-B)/2.
struct AntiSym {
    i128 all_sum = 1;
    i128 signed_prod = 1;
};

AntiSym antisym(const Factorization& nf, bool plus_case) {
    AntiSym r;
    for (const auto& [p, e] : nf.factors) {
        LocalLiarCounts c = local_counts(nf.n, p);
        i128 a = plus_case ? (i128)c.lpp : (i128)c.lmp;
        i128 b = plus_case ? (i128)c.lpm : (i128)c.lmm;
        r.all_sum *= a + b;
        r.signed_prod *= (e % 2 == 0) ? (a + b) : (a - b);
    }
    return r;
}

u128 exact_half(i128 v, const char* who) {
    if (v < 0 || v % 2 != 0) throw std::logic_error(std::string(who) + ": anti-symmetrized sum not an even nonnegative value");
    return (u128)(v / 2);
}

}  // namespace

u128 count_plus(const Factorization& nf) {
    require_odd_composite(nf, "count_plus");
    AntiSym r = antisym(nf, true);
    return exact_half(r.all_sum + r.signed_prod, "count_plus");
}

u128 count_minus(const Factorization& nf) {
    require_odd_composite(nf, "count_minus");
    AntiSym r = antisym(nf, false);
    return exact_half(r.all_sum - r.signed_prod, "count_minus");
}

LiarCounts count_squarefree(const Factorization& nf) {
    require_odd_composite(nf, "count_squarefree");
    if (!nf.squarefree()) throw std::invalid_argument("count_squarefree: n must be squarefree");
    const u64 n = nf.n;
    const u128 n1 = (u128)n - 1;
    const u128 n2 = (u128)n * n - 1;

    i128 plus_sum = 1, plus_diff = 1, minus_sum = 1, minus_diff = 1;
    for (const auto& [p, e] : nf.factors) {
        const u128 p1 = (u128)p - 1;
        const u128 p2 = (u128)p * p - 1;
        const u128 g11 = gcd128(n1, p1);
        const u128 g12 = gcd128(n1, p2);
        const u128 g21 = gcd128(n2, p1);
        const u128 g22 = gcd128(gcd128(n2, p2), (u128)n - p);
        auto half = [](i128 v) {
            if (v % 2 != 0) throw std::logic_error("count_squarefree: parity violation");
            return v / 2;
        };
        plus_sum *= half((i128)g12 + (i128)(g11 * g11) - 2 * (i128)g11);
        plus_diff *= half((i128)(g11 * g11) - (i128)g12);
        minus_sum *= half((i128)g21 + (i128)g22 - 2 * (i128)g11);
        minus_diff *= half((i128)g21 - (i128)g22);
    }
    LiarCounts out;
    out.plus = exact_half(plus_sum + plus_diff, "count_squarefree(+)");
    out.minus = exact_half(minus_sum - minus_diff, "count_squarefree(-)");
    return out;
}

UpperBounds upper_bounds(const Factorization& nf) {
    require_odd_composite(nf, "upper_bounds");
    const u128 n1 = (u128)nf.n - 1;
    const u128 n2 = (u128)nf.n * nf.n - 1;
    UpperBounds b{1, 1};
    for (const auto& [p, e] : nf.factors) {
        const u128 p1 = (u128)p - 1;
        const u128 p2 = (u128)p * p - 1;
        u128 g11 = gcd128(n1, p1);
        b.plus *= std::max(gcd128(n1, p2), g11 * g11);
        b.minus *= gcd128(n2, p2);
    }
    return b;
}

LambdaStats lambda_stats(const Factorization& nf) {
    require_odd_composite(nf, "lambda_stats");
    const u128 n1 = (u128)nf.n - 1;
    const u128 n2 = (u128)nf.n * nf.n - 1;
    LambdaStats s;
    for (const auto& [p, e] : nf.factors) {
        const u128 p1 = (u128)p - 1;
        const u128 p2 = (u128)p * p - 1;
        s.lambda = s.lambda / gcd128(s.lambda, p1) * p1;
        s.lambda2 = s.lambda2 / gcd128(s.lambda2, p2) * p2;
        u128 g11 = gcd128(n1, p1);
        u128 dn = (g11 * g11 > gcd128(n1, p2)) ? p1 * p1 : p2;
        s.d_table.emplace_back(p, dn);
    }
    s.k_plus = s.lambda / gcd128(s.lambda, n1);
    s.k_minus = s.lambda2 / gcd128(s.lambda2, n2);
    return s;
}

VanishingFlags vanishing_predicates(const Factorization& nf) {
    require_odd_composite(nf, "vanishing_predicates");
    VanishingFlags f;
    if (nf.squarefree()) {
        f.is_carmichael = true;
        f.is_rigid_order2 = true;
        const u128 n1 = (u128)nf.n - 1;
        for (const auto& [p, e] : nf.factors) {
            if (n1 % ((u128)p - 1) != 0) f.is_carmichael = false;
            if (n1 % ((u128)p * p - 1) != 0) f.is_rigid_order2 = false;
        }
    }
    f.minus_count_zero = count_minus(nf) == 0;
    return f;
}

PrimeReference prime_reference(u64 p) {
    if (!is_prime(p) || p < 3) throw std::invalid_argument("prime_reference: p must be an odd prime");
    PrimeReference r;
    r.total = (u128)(p - 1) * (p - 1);
    r.plus = (u128)(p - 1) * (p - 2) / 2;
    r.minus = (u128)p * (p - 1) / 2;
    return r;
}

}  // namespace frob
