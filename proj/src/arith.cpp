#include "frob/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace frob {

std::string to_string_u128(u128 v) {
    if (v == 0) return "0";
    std::string out;
    while (v > 0) {
        out.push_back(char('0' + (int)(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::string to_string_i128(i128 v) {
    if (v < 0) return "-" + to_string_u128((u128)(-v));
    return to_string_u128((u128)v);
}

u64 powmod(u64 base, u64 e, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

int jacobi(i128 a, u64 n) {
    if (n == 0 || n % 2 == 0) throw std::invalid_argument("jacobi: modulus must be odd and positive");
    u64 x = (a >= 0) ? (u64)((u128)a % n) : n - (u64)((u128)(-a) % n);
    if (x == n) x = 0;
    int sign = 1;
    u64 m = n;
    while (x != 0) {
        while (x % 2 == 0) {
            x >>= 1;
            u64 r = m % 8;
            if (r == 3 || r == 5) sign = -sign;
        }
        std::swap(x, m);
        if (x % 4 == 3 && m % 4 == 3) sign = -sign;
        x %= m;
    }
    return m == 1 ? sign : 0;
}

namespace {

bool strong_probable_prime(u64 n, u64 base) {
    base %= n;
    if (base == 0) return true;
    u64 d = n - 1;
    int r = 0;
    while (d % 2 == 0) {
        d >>= 1;
        ++r;
    }
    u64 x = powmod(base, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    if (n < 41 * 41) return true;
    // Proven deterministic base set for all 64-bit inputs.
    for (u64 base : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        if (!strong_probable_prime(n, base)) return false;
    }
    return true;
}

std::optional<u64> inv_mod(u64 a, u64 m) {
    if (m == 0) return std::nullopt;
    a %= m;
    i64 t = 0, new_t = 1;
    u64 r = m, new_r = a;
    while (new_r != 0) {
        u64 q = r / new_r;
        i64 tmp_t = t - (i64)q * new_t;
        t = new_t;
        new_t = tmp_t;
        u64 tmp_r = r - q * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    if (r != 1) return std::nullopt;
    return t < 0 ? (u64)(t + (i64)m) : (u64)t;
}

bool Factorization::squarefree() const {
    for (const auto& [p, r] : factors)
        if (r > 1) return false;
    return true;
}

u64 Factorization::product() const {
    u64 v = 1;
    for (const auto& [p, r] : factors)
        for (int i = 0; i < r; ++i) v *= p;
    return v;
}

std::string Factorization::to_string() const {
    if (factors.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) out += '*';
        out += std::to_string(factors[i].first);
        if (factors[i].second > 1) {
            out += '^';
            out += std::to_string(factors[i].second);
        }
    }
    return out;
}

namespace {

constexpr u64 kTrialLimit = 1u << 20;

// Brent's cycle variant of Pollard's rho; n must be odd composite with no
// factor below kTrialLimit. Seed drives the polynomial offsets
// deterministically.
u64 brent_rho(u64 n, u64 seed) {
    if (n % 2 == 0) return 2;
    u64 state = seed ^ n;
    auto next_param = [&state]() {
        // splitmix64 step
        state += 0x9e3779b97f4a7c15ull;
        u64 z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    while (true) {
        u64 c = next_param() % (n - 1) + 1;
        u64 y = next_param() % n;
        u64 g = 1, r = 1, q = 1, x = 0, ys = 0;
        const u64 m = 128;
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
            for (u64 k = 0; k < r && g == 1; k += m) {
                ys = y;
                u64 lim = std::min(m, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (mulmod(ys, ys, n) + c) % n;
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (g != n) return g;
    }
}

void factor_recursive(u64 n, u64 seed, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = brent_rho(n, seed);
    factor_recursive(d, seed, out);
    factor_recursive(n / d, seed, out);
}

}  // namespace

Factorization factorize(u64 n, u64 seed) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    f.n = n;
    if (n == 1) return f;
    std::vector<u64> primes;
    u64 rest = n;
    for (u64 d = 2; d < kTrialLimit && d * d <= rest; d = (d == 2 ? 3 : d + 2)) {
        while (rest % d == 0) {
            primes.push_back(d);
            rest /= d;
        }
    }
    if (rest > 1) {
        if (rest < kTrialLimit * kTrialLimit || is_prime(rest))
            primes.push_back(rest);
        else
            factor_recursive(rest, seed, primes);
    }
    std::sort(primes.begin(), primes.end());
    for (u64 p : primes) {
        if (!f.factors.empty() && f.factors.back().first == p)
            f.factors.back().second++;
        else
            f.factors.emplace_back(p, 1);
    }
    return f;
}

u64 lcm_upto(u64 B) {
    if (B == 0) throw std::invalid_argument("lcm_upto: B must be positive");
    u64 acc = 1;
    for (u64 m = 2; m <= B; ++m) {
        u64 g = std::gcd(acc, m);
        u64 step = m / g;
        if (acc > UINT64_MAX / step) throw std::overflow_error("lcm_upto: value exceeds 64 bits");
        acc *= step;
    }
    return acc;
}

CrtResult crt(std::span<const std::pair<u64, u64>> residues) {
    if (residues.empty()) throw std::invalid_argument("crt: need at least one congruence");
    CrtResult acc{0, 1};
    for (size_t i = 0; i < residues.size(); ++i) {
        auto [v, m] = residues[i];
        if (m == 0) throw std::invalid_argument("crt: zero modulus");
        u64 g = std::gcd(acc.modulus, m);
        if (g != 1) {
            // locate the earlier modulus sharing a factor, for the error message
            for (size_t j = 0; j < i; ++j) {
                if (std::gcd(residues[j].second, m) != 1)
                    throw std::invalid_argument("crt: moduli not coprime: " + std::to_string(residues[j].second) +
                                                " and " + std::to_string(m));
            }
            throw std::invalid_argument("crt: moduli not coprime with product so far: " + std::to_string(m));
        }
        if (acc.modulus > UINT64_MAX / m) throw std::overflow_error("crt: combined modulus exceeds 64 bits");
        auto merged = crt_merge(acc.value, acc.modulus, v % m, m);
        acc = *merged;  // coprime merge cannot fail
    }
    return acc;
}

std::optional<CrtResult> crt_merge(u64 r1, u64 m1, u64 r2, u64 m2) {
    if (m1 == 0 || m2 == 0) throw std::invalid_argument("crt_merge: zero modulus");
    r1 %= m1;
    r2 %= m2;
    u64 g = std::gcd(m1, m2);
    u64 diff = r2 >= r1 ? r2 - r1 : r1 - r2;
    if (diff % g != 0) return std::nullopt;
    u64 l1 = m1 / g, l2 = m2 / g;
    if (l1 > UINT64_MAX / m2) throw std::overflow_error("crt_merge: combined modulus exceeds 64 bits");
    u64 lcm = l1 * m2;
    // x = r1 + m1 * t, need m1 * t = r2 - r1 (mod m2)  =>  t = d/g * inv(m1/g) (mod m2/g)
    u128 d = r2 >= r1 ? (u128)(r2 - r1) : (u128)lcm + r2 - r1;
    u128 dg = (d / g) % l2;
    auto inv = inv_mod(l1 % l2, l2);
    u64 t = l2 ? (u64)((dg * (inv ? *inv : 0)) % l2) : 0;
    if (l2 == 1) t = 0;
    u64 x = (u64)(((u128)r1 + (u128)(m1 % lcm) * t) % lcm);
    return CrtResult{x, lcm};
}

}  // namespace frob
