#include "frob/construct.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "frob/liarcount.hpp"

namespace frob {

namespace {

std::vector<u64> primes_below(u64 bound) {
    std::vector<u64> out;
    for (u64 p = 2; p < bound; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

int v2(u64 x) { return x == 0 ? 64 : __builtin_ctzll(x); }

u64 checked_mul_u64(u64 a, u64 b, const char* who) {
    if (a != 0 && b > UINT64_MAX / a) throw std::overflow_error(std::string(who) + ": product exceeds 64 bits");
    return a * b;
}

u64 default_candidate_cap(u64 modulus, int linnik_exponent, u64 requested) {
    if (requested > 0) return requested;
    double budget = std::pow((double)modulus, (double)std::max(1, linnik_exponent - 1));
    if (budget > 1e8) budget = 1e8;
    return std::max<u64>(10000, (u64)budget);
}

/// Smallest prime strictly greater than `floor` congruent to r mod m,
/// optionally coprime to `coprime_to`; candidate count limited by cap.
u64 prime_in_class(u64 r, u64 m, u64 floor_value, u64 coprime_to, u64 cap, const char* who) {
    r %= m;
    u64 c = r == 0 ? m : r;
    if (c <= floor_value) {
        u64 steps = (floor_value - c) / m + 1;
        c += checked_mul_u64(steps, m, who);
    }
    for (u64 tried = 0; tried < cap; ++tried) {
        if ((coprime_to == 0 || std::gcd(c, coprime_to) == 1) && is_prime(c)) return c;
        if (c > UINT64_MAX - m) throw std::overflow_error(std::string(who) + ": candidate exceeds 64 bits");
        c += m;
    }
    throw SearchExhausted(std::string(who) + ": no prime found within the candidate budget");
}

}  // namespace

std::vector<u64> p_set_plus(u64 M, u64 bound) {
    if (M == 0) throw std::invalid_argument("p_set_plus: M must be positive");
    std::vector<u64> out;
    for (u64 p : primes_below(bound))
        if (M % (p - 1) == 0) out.push_back(p);
    return out;
}

std::vector<u64> p_set_minus(u64 M, u64 bound) {
    if (M == 0) throw std::invalid_argument("p_set_minus: M must be positive");
    std::vector<u64> out;
    for (u64 p : primes_below(bound)) {
        u128 p2 = (u128)p * p - 1;
        if (p2 <= M && M % (u64)p2 == 0) out.push_back(p);
    }
    return out;
}

std::vector<u64> p_set_split(u64 M1, u64 M2, u64 bound) {
    if (std::gcd(M1, M2) != 2) throw std::invalid_argument("p_set_split: gcd(M1, M2) must be 2");
    std::vector<u64> out;
    for (u64 p : primes_below(bound))
        if (M1 % (p - 1) == 0 && M2 % (p + 1) == 0) out.push_back(p);
    return out;
}

SplitSearchResult split_search(u64 M, std::span<const u64> targets, u64 search_cap) {
    for (u64 p : targets) {
        u128 p2 = (u128)p * p - 1;
        if (!is_prime(p) || p2 > M || M % (u64)p2 != 0)
            throw std::invalid_argument("split_search: every target must be prime with p^2-1 | M");
    }
    Factorization mf = factorize(M);
    const int v = mf.factors.empty() || mf.factors[0].first != 2 ? 0 : mf.factors[0].second;
    if (v < 2) return {SplitSearchResult::Status::Inconsistent, 0, 0, "M needs 2-adic valuation >= 2 for a gcd-2 split"};

    // Odd components forced by the targets: side 1 for primes of p-1, side 2
    // for primes of p+1.
    std::vector<u64> odd_primes;
    std::vector<int> odd_exp;
    for (const auto& [p, e] : mf.factors)
        if (p != 2) {
            odd_primes.push_back(p);
            odd_exp.push_back(e);
        }
    std::vector<int> side(odd_primes.size(), 0);  // 0 free, 1 forced M1, 2 forced M2
    int need_a = 1, need_b = 1;                   // required 2-adic valuations on each side
    for (u64 t : targets) {
        need_a = std::max(need_a, v2(t - 1));
        need_b = std::max(need_b, v2(t + 1));
        for (auto shifted : {t - 1, t + 1}) {
            int want = shifted == t - 1 ? 1 : 2;
            u64 rest = shifted >> v2(shifted);
            Factorization sf = factorize(rest);
            for (const auto& [lp, le] : sf.factors) {
                auto it = std::find(odd_primes.begin(), odd_primes.end(), lp);
                if (it == odd_primes.end())
                    throw std::logic_error("split_search: target shift has a prime outside M");
                size_t idx = (size_t)(it - odd_primes.begin());
                if (side[idx] != 0 && side[idx] != want)
                    return {SplitSearchResult::Status::Inconsistent, 0, 0,
                            "odd prime " + std::to_string(lp) + " required on both sides"};
                side[idx] = want;
            }
        }
    }
    // 2-part: (i, j) with i + j = v and min = 1.
    std::vector<std::pair<int, int>> two_splits;
    if (need_a == v - 1) two_splits.push_back({v - 1, 1});
    if (need_b == v - 1) two_splits.push_back({1, v - 1});
    two_splits.push_back({1, v - 1});
    two_splits.push_back({v - 1, 1});
    std::erase_if(two_splits, [&](auto ij) { return need_a > ij.first || need_b > ij.second; });
    if (two_splits.empty())
        return {SplitSearchResult::Status::Inconsistent, 0, 0, "2-adic requirements exceed the gcd-2 split"};

    std::vector<size_t> free_idx;
    for (size_t i = 0; i < side.size(); ++i)
        if (side[i] == 0) free_idx.push_back(i);

    auto build = [&](int i2, int j2, u64 mask) -> std::optional<SplitSearchResult> {
        u64 m1 = 1ull << i2, m2 = 1ull << j2;
        std::vector<int> assign = side;
        // Greedy default (mask bit 0 = side 2): free components go to M2 until
        // it holds two distinct odd primes, the rest to M1.
        int m2_odd = 0;
        for (size_t i = 0; i < side.size(); ++i)
            if (side[i] == 2) ++m2_odd;
        for (size_t k = 0; k < free_idx.size(); ++k) {
            bool flip = (mask >> k) & 1;
            bool to_m2 = (m2_odd < 2) != flip;
            if (to_m2) {
                assign[free_idx[k]] = 2;
                ++m2_odd;
            } else {
                assign[free_idx[k]] = 1;
            }
        }
        for (size_t i = 0; i < odd_primes.size(); ++i) {
            u64 comp = 1;
            for (int e = 0; e < odd_exp[i]; ++e) comp *= odd_primes[i];
            (assign[i] == 2 ? m2 : m1) *= comp;
        }
        if (std::gcd(m1, m2) != 2) return std::nullopt;
        for (u64 t : targets)
            if (m1 % (t - 1) != 0 || m2 % (t + 1) != 0) return std::nullopt;
        return SplitSearchResult{SplitSearchResult::Status::Found, m1, m2, ""};
    };

    u64 tried = 0;
    for (auto [i2, j2] : two_splits) {
        u64 mask_count = free_idx.size() >= 63 ? UINT64_MAX : (1ull << free_idx.size());
        for (u64 mask = 0; mask < mask_count; ++mask) {
            if (++tried > search_cap)
                return {SplitSearchResult::Status::Exhausted, 0, 0, "assignment budget exhausted"};
            if (auto r = build(i2, j2, mask)) return *r;
        }
    }
    return {SplitSearchResult::Status::Inconsistent, 0, 0, "no assignment satisfies all targets"};
}

namespace {

Factorization validate_s(u64 s, const char* who) {
    if (s < 3 || s % 2 == 0) throw std::invalid_argument(std::string(who) + ": s must be odd and >= 3");
    Factorization sf = factorize(s);
    if (!sf.squarefree()) throw std::invalid_argument(std::string(who) + ": s must be squarefree");
    return sf;
}

}  // namespace

ConstructionRecipe construct_plus(u64 s, u64 M, const ConstructionParams& params) {
    if (M < 2) throw std::invalid_argument("construct_plus: M must be >= 2");
    Factorization sf = validate_s(s, "construct_plus");
    for (const auto& [p, e] : sf.factors)
        if (M % (p - 1) != 0)
            throw std::invalid_argument("construct_plus: p-1 must divide M for every p | s (p=" + std::to_string(p) + ")");
    if (std::gcd(s, M) != 1) throw std::invalid_argument("construct_plus: gcd(s, M) must be 1");

    u64 sinv = *inv_mod(s % M, M);
    u64 cap = default_candidate_cap(M, params.linnik_exponent, params.search_cap);
    u64 q = prime_in_class(sinv, M, M, s, cap, "construct_plus");

    ConstructionRecipe r;
    r.kind = ConstructionRecipe::Kind::Plus;
    r.s = s;
    r.s_factors = sf;
    r.M = M;
    r.q1 = q;
    r.n = checked_mul_u64(s, q, "construct_plus");
    r.predicted_lower_bound = 1;
    for (const auto& [p, e] : sf.factors) r.predicted_lower_bound *= (u128)(p - 1) * (p - 2) / 2;

    // Construction guarantees, re-checked numerically.
    if ((u128)s * q % M != 1 % M) throw std::logic_error("construct_plus: sq != 1 mod M");
    if (std::gcd(q, s) != 1) throw std::logic_error("construct_plus: q shares a factor with s");
    u128 g = gcd128((u128)q - 1, (u128)r.n - 1);
    if (g * g - g == 0) throw std::logic_error("construct_plus: no liar contribution at q");
    u128 check = 1;
    for (const auto& [p, e] : sf.factors) check *= local_counts(r.n, p).lpp;
    if (check != r.predicted_lower_bound)
        throw std::logic_error("construct_plus: predicted bound does not match the local counts");
    return r;
}

ConstructionRecipe construct_minus(u64 s, u64 M1, u64 M2, u64 l1, u64 l2, const ConstructionParams& params) {
    if (M1 < 2 || M2 < 2) throw std::invalid_argument("construct_minus: M1 and M2 must be >= 2");
    Factorization sf = validate_s(s, "construct_minus");
    if (sf.omega() % 2 == 0) throw std::invalid_argument("construct_minus: s must be a product of an odd number of primes");
    for (const auto& [p, e] : sf.factors) {
        if (M1 % (p - 1) != 0 || M2 % (p + 1) != 0)
            throw std::invalid_argument("construct_minus: need p-1 | M1 and p+1 | M2 for every p | s (p=" +
                                        std::to_string(p) + ")");
    }

    // Two distinct odd primes of M2.
    Factorization m2f = factorize(M2);
    std::vector<std::pair<u64, int>> odd;
    for (const auto& [p, e] : m2f.factors)
        if (p != 2) odd.emplace_back(p, e);
    if (odd.size() < 2) throw std::invalid_argument("construct_minus: M2 must have two distinct odd prime factors");
    if (l1 == 0) l1 = odd[0].first;
    if (l2 == 0) l2 = (l1 == odd[0].first) ? odd[1].first : odd[0].first;
    if (l1 == l2) throw std::invalid_argument("construct_minus: l1 and l2 must be distinct");
    int r1 = 0, r2 = 0;
    for (const auto& [p, e] : odd) {
        if (p == l1) r1 = e;
        if (p == l2) r2 = e;
    }
    if (r1 == 0 || r2 == 0) throw std::invalid_argument("construct_minus: l1 and l2 must be odd primes dividing M2");
    u64 L1 = 1, L2 = 1;
    for (int i = 0; i < r1; ++i) L1 *= l1;
    for (int i = 0; i < r2; ++i) L2 *= l2;
    u64 M2p = M2 / L1 / L2;

    const u64 M = checked_mul_u64(M1, M2, "construct_minus");

    // The 2-adic shift of every p | s must match the split exactly, otherwise
    // gcd(p^2-1, n^2-1, n-p) drops below p^2-1 and the predicted bound with it.
    int a = v2(M1), b = v2(M2);
    if (a >= 2 && b >= 2)
        throw std::invalid_argument("construct_minus: n = 1 mod M1 and n = -1 mod M2 are inconsistent mod 4");
    bool pin_side1 = a >= 2;
    int v = pin_side1 ? a : b;
    if (v < 2) throw std::invalid_argument("construct_minus: one of M1, M2 needs 2-adic valuation >= 2");
    for (const auto& [p, e] : sf.factors) {
        int have = pin_side1 ? v2(p - 1) : v2(p + 1);
        if (have != v)
            throw std::invalid_argument("construct_minus: 2-adic mismatch at p=" + std::to_string(p) +
                                        " (needs matching power of 2 in the pinned side)");
    }

    u64 cap = default_candidate_cap(M, params.linnik_exponent, params.search_cap);
    auto require_inv = [&](u64 value, u64 mod, const char* what) {
        auto iv = inv_mod(value % mod, mod);
        if (!iv) throw std::invalid_argument(std::string("construct_minus: congruence system infeasible (") + what + ")");
        return *iv;
    };
    auto merge_all = [&](std::initializer_list<std::pair<u64, u64>> congs) {
        CrtResult acc{0, 1};
        for (auto [r, m] : congs) {
            if (m == 1) continue;
            auto merged = crt_merge(acc.value, acc.modulus, r % m, m);
            if (!merged)
                throw std::invalid_argument("construct_minus: congruence system infeasible (inconsistent moduli)");
            acc = *merged;
        }
        return acc;
    };

    // q1: s*q1 = 1 (M1), s*q1 = -1 (M2'), q1 = 1 (l1^r1), s*q1 = -1 (l2^r2)
    u64 q1_m1 = require_inv(s, M1, "gcd(s, M1) != 1");
    u64 q1_m2p = M2p == 1 ? 0 : mulmod(M2p - 1, require_inv(s, M2p, "gcd(s, M2') != 1"), M2p);
    u64 q1_l2 = mulmod(L2 - 1, require_inv(s, L2, "gcd(s, l2) != 1"), L2);
    CrtResult c1 = merge_all({{q1_m1, M1}, {q1_m2p, M2p}, {1 % L1, L1}, {q1_l2, L2}});
    u64 q1 = prime_in_class(c1.value, c1.modulus, M, s, cap, "construct_minus(q1)");

    // q2: q2 = 1 (M1), q2 = 1 (M2'), s*q2 = -1 (l1^r1), q2 = 1 (l2^r2),
    // plus the pin fixing the exact power of 2 in n -+ 1.
    u64 q2_l1 = mulmod(L1 - 1, require_inv(s, L1, "gcd(s, l1) != 1"), L1);
    u64 two_pin_mod = 1ull << (v + 1);
    u64 sq1 = mulmod(s % two_pin_mod, q1 % two_pin_mod, two_pin_mod);
    u64 target = pin_side1 ? (1ull << v) + 1 : (1ull << v) - 1;  // n mod 2^(v+1)
    u64 q2_pin = mulmod(target, *inv_mod(sq1, two_pin_mod), two_pin_mod);
    CrtResult c2 = merge_all({{1 % M1, M1}, {1 % M2p, M2p}, {q2_l1, L1}, {1 % L2, L2}, {q2_pin, two_pin_mod}});
    u64 q2 = 0;
    for (u64 skip = 0;; ++skip) {
        q2 = prime_in_class(c2.value, c2.modulus, skip == 0 ? M : q2, s, cap, "construct_minus(q2)");
        if (q2 != q1) break;
    }

    ConstructionRecipe r;
    r.kind = ConstructionRecipe::Kind::Minus;
    r.s = s;
    r.s_factors = sf;
    r.M1 = M1;
    r.M2 = M2;
    r.M = M;
    r.l1 = l1;
    r.l2 = l2;
    r.M2_prime = M2p;
    r.q1 = q1;
    r.q2 = q2;
    r.n = checked_mul_u64(checked_mul_u64(s, q1, "construct_minus"), q2, "construct_minus");
    r.predicted_lower_bound = 1;
    for (const auto& [p, e] : sf.factors)
        r.predicted_lower_bound *= ((u128)p * p - 1 - (p - 1)) / 2;

    // Construction guarantees, re-checked numerically.
    if (r.n % M1 != 1 % M1) throw std::logic_error("construct_minus: n != 1 mod M1");
    if (r.n % M2 != (M2 - 1) % M2) throw std::logic_error("construct_minus: n != -1 mod M2");
    if (std::gcd(q1, s) != 1 || std::gcd(q2, s) != 1) throw std::logic_error("construct_minus: q shares a factor with s");
    for (u64 q : {q1, q2}) {
        u128 diff = gcd128((u128)r.n * r.n - 1, (u128)q - 1) - gcd128((u128)r.n - 1, (u128)q - 1);
        if (diff == 0) throw std::logic_error("construct_minus: no liar contribution at q=" + std::to_string(q));
    }
    u128 check = 1;
    for (const auto& [p, e] : sf.factors) check *= local_counts(r.n, p).lmm;
    if (check != r.predicted_lower_bound)
        throw std::logic_error("construct_minus: predicted bound does not match the local counts");
    return r;
}

std::vector<u64> s_set_sample(std::span<const u64> pset, int k, u64 cutoff, size_t limit) {
    std::vector<u64> filtered;
    for (u64 p : pset)
        if (p >= cutoff) filtered.push_back(p);
    if (k < 1 || (size_t)k > filtered.size())
        throw std::invalid_argument("s_set_sample: k exceeds the filtered prime set");
    std::vector<u64> out;
    std::vector<size_t> idx(k);
    for (int i = 0; i < k; ++i) idx[(size_t)i] = (size_t)i;
    while (out.size() < limit) {
        u64 prod = 1;
        for (size_t i : idx) prod = checked_mul_u64(prod, filtered[i], "s_set_sample");
        out.push_back(prod);
        // next combination, lexicographic by index
        int pos = k - 1;
        while (pos >= 0 && idx[(size_t)pos] == filtered.size() - (size_t)(k - pos)) --pos;
        if (pos < 0) break;
        ++idx[(size_t)pos];
        for (int j = pos + 1; j < k; ++j) idx[(size_t)j] = idx[(size_t)(j - 1)] + 1;
    }
    return out;
}

double script_L(double y) {
    static const double ee = std::exp(std::exp(1.0));
    if (!(y > ee)) throw std::domain_error("script_L: y must exceed e^e");
    double lg = std::log(y);
    double llg = std::log(lg);
    double lllg = std::log(llg);
    return std::exp(lg * lllg / llg);
}

DerivedKnobs knobs_from_x(double x, double alpha, int linnik_exponent) {
    if (!(x > std::exp(1.0))) throw std::domain_error("knobs_from_x: x must exceed e");
    if (!(alpha > 1.0)) throw std::invalid_argument("knobs_from_x: alpha must exceed 1");
    DerivedKnobs k;
    double lg = std::log(x), llg = std::log(lg);
    if (!(llg > 0)) throw std::domain_error("knobs_from_x: log log x must be positive");
    k.B = (u64)std::floor(lg / llg);
    if (k.B < 1) k.B = 1;
    k.M = lcm_upto(k.B);
    double bound = std::pow(lg, alpha);
    k.prime_bound = bound > 1e18 ? (u64)1e18 : (u64)std::floor(bound);
    double logM = std::log((double)k.M);
    k.k_plus = (i64)std::floor((lg - linnik_exponent * logM) / (alpha * llg));
    k.k_minus = (i64)std::floor((lg - 2.0 * linnik_exponent * logM) / (alpha * llg));
    return k;
}

std::string ConstructionRecipe::to_line(u128 verified_count) const {
    std::string out;
    if (kind == Kind::Plus) {
        out = "plus s=" + std::to_string(s) + " s_factors=" + s_factors.to_string() + " M=" + std::to_string(M) +
              " q=" + std::to_string(q1) + " n=" + std::to_string(n) +
              " predicted=" + to_string_u128(predicted_lower_bound) + " verified_plus=" + to_string_u128(verified_count);
    } else {
        out = "minus s=" + std::to_string(s) + " s_factors=" + s_factors.to_string() + " M1=" + std::to_string(M1) +
              " M2=" + std::to_string(M2) + " l1=" + std::to_string(l1) + " l2=" + std::to_string(l2) +
              " M2_prime=" + std::to_string(M2_prime) + " q1=" + std::to_string(q1) + " q2=" + std::to_string(q2) +
              " n=" + std::to_string(n) + " predicted=" + to_string_u128(predicted_lower_bound) +
              " verified_minus=" + to_string_u128(verified_count);
    }
    return out;
}

}  // namespace frob
