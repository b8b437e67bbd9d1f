#include "frob/polymod.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace frob {

namespace {

void require_same_modulus(const PolyMod& a, const PolyMod& b) {
    if (a.modulus != b.modulus) throw std::invalid_argument("polymod: modulus mismatch");
}

}  // namespace

PolyMod PolyMod::one(u64 n) {
    if (n < 2) throw std::invalid_argument("polymod: modulus must be >= 2");
    return PolyMod{n, {1}};
}

PolyMod PolyMod::x(u64 n) {
    PolyMod p{n, {0, 1}};
    p.normalize();
    return p;
}

PolyMod PolyMod::from_coeffs(u64 n, std::vector<u64> coeffs) {
    if (n < 2) throw std::invalid_argument("polymod: modulus must be >= 2");
    PolyMod p{n, std::move(coeffs)};
    for (auto& v : p.c) v %= n;
    p.normalize();
    return p;
}

void PolyMod::normalize() {
    while (!c.empty() && c.back() % modulus == 0) c.pop_back();
    for (auto& v : c) v %= modulus;
}

std::string poly_to_string(const PolyMod& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        u64 v = f.c[i];
        if (v == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0 || v != 1) out += std::to_string(v);
        if (i >= 1) {
            if (v != 1) out += "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

PolyMod poly_add(const PolyMod& a, const PolyMod& b) {
    require_same_modulus(a, b);
    PolyMod r{a.modulus, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = (a.coeff(i) + b.coeff(i)) % a.modulus;
    r.normalize();
    return r;
}

PolyMod poly_sub(const PolyMod& a, const PolyMod& b) {
    require_same_modulus(a, b);
    PolyMod r{a.modulus, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) {
        u64 av = a.coeff(i), bv = b.coeff(i);
        r.c[i] = av >= bv ? av - bv : av + a.modulus - bv;
    }
    r.normalize();
    return r;
}

PolyMod poly_mul(const PolyMod& a, const PolyMod& b) {
    require_same_modulus(a, b);
    if (a.is_zero() || b.is_zero()) return PolyMod::zero(a.modulus);
    PolyMod r{a.modulus, std::vector<u64>(a.c.size() + b.c.size() - 1, 0)};
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            u128 acc = (u128)a.c[i] * b.c[j] + r.c[i + j];
            r.c[i + j] = (u64)(acc % a.modulus);
        }
    }
    r.normalize();
    return r;
}

PolyMod poly_scale(const PolyMod& a, u64 k) {
    PolyMod r = a;
    k %= a.modulus;
    for (auto& v : r.c) v = mulmod(v, k, a.modulus);
    r.normalize();
    return r;
}

std::pair<PolyMod, PolyMod> poly_divrem(const PolyMod& a, const PolyMod& b) {
    require_same_modulus(a, b);
    if (!b.is_monic()) throw std::invalid_argument("poly_divrem: divisor must be monic");
    if (a.degree() < b.degree()) return {PolyMod::zero(a.modulus), a};
    const u64 n = a.modulus;
    PolyMod rem = a;
    PolyMod quot{n, std::vector<u64>(a.c.size() - b.c.size() + 1, 0)};
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        size_t top = k + b.c.size() - 1;
        u64 q = top < rem.c.size() ? rem.c[top] : 0;
        if (q == 0) continue;
        quot.c[k] = q;
        for (size_t i = 0; i < b.c.size(); ++i) {
            u64 sub = mulmod(q, b.c[i], n);
            u64& tgt = rem.c[k + i];
            tgt = tgt >= sub ? tgt - sub : tgt + n - sub;
        }
    }
    rem.normalize();
    quot.normalize();
    return {quot, rem};
}

PolyMod poly_mul_mod(const PolyMod& u, const PolyMod& v, const PolyMod& f) {
    require_same_modulus(u, f);
    require_same_modulus(v, f);
    if (!f.is_monic()) throw std::invalid_argument("poly_mul_mod: reduction modulus must be monic");
    return poly_divrem(poly_mul(u, v), f).second;
}

PolyMod poly_powmod(const PolyMod& base, u128 e, const PolyMod& f) {
    require_same_modulus(base, f);
    if (!f.is_monic()) throw std::invalid_argument("poly_powmod: reduction modulus must be monic");
    if (f.is_one()) return PolyMod::zero(f.modulus);
    PolyMod result = PolyMod::one(f.modulus);
    PolyMod acc = poly_divrem(base, f).second;
    while (e > 0) {
        if (e & 1) result = poly_mul_mod(result, acc, f);
        acc = poly_mul_mod(acc, acc, f);
        e >>= 1;
    }
    return result;
}

PolyMod poly_compose_mod(const PolyMod& outer, const PolyMod& y, const PolyMod& f) {
    require_same_modulus(outer, f);
    require_same_modulus(y, f);
    PolyMod acc = PolyMod::zero(f.modulus);
    for (int i = outer.degree(); i >= 0; --i) {
        acc = poly_mul_mod(acc, y, f);
        acc = poly_add(acc, PolyMod::from_coeffs(f.modulus, {outer.c[i]}));
    }
    return acc;
}

GcmdResult gcmd(const PolyMod& g1, const PolyMod& g2) {
    require_same_modulus(g1, g2);
    if (g1.is_zero() && g2.is_zero()) throw std::invalid_argument("gcmd: both inputs zero");
    const u64 n = g1.modulus;
    PolyMod a = g1, b = g2;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        u64 lc = b.lead();
        u64 g = std::gcd(lc, n);
        if (g != 1) return GcmdResult{true, PolyMod::zero(n), g};
        PolyMod monic = poly_scale(b, *inv_mod(lc, n));
        PolyMod r = poly_divrem(a, monic).second;
        a = std::move(monic);
        b = std::move(r);
    }
    u64 lc = a.lead();
    u64 g = std::gcd(lc, n);
    if (g != 1) return GcmdResult{true, PolyMod::zero(n), g};
    return GcmdResult{false, poly_scale(a, *inv_mod(lc, n)), 0};
}

PolyMod poly_field_gcd(const PolyMod& a_in, const PolyMod& b_in, u64 p) {
    PolyMod a = PolyMod::from_coeffs(p, a_in.c);
    PolyMod b = PolyMod::from_coeffs(p, b_in.c);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        PolyMod monic = poly_scale(b, *inv_mod(b.lead(), p));
        PolyMod r = poly_divrem(a, monic).second;
        a = std::move(monic);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return poly_scale(a, *inv_mod(a.lead(), p));
}

namespace {

i128 symmetric_lift(u64 v, u64 n) {
    // lift into (-n/2, n/2]
    if ((u128)v * 2 > n) return (i128)v - (i128)n;
    return (i128)v;
}

i128 checked_mul(i128 a, i128 b) {
    if (a == 0 || b == 0) return 0;
    i128 r = a * b;
    if (r / b != a) throw std::overflow_error("discriminant: exceeds 128 bits");
    return r;
}

i128 checked_add(i128 a, i128 b) {
    i128 r = a + b;
    if ((b > 0 && r < a) || (b < 0 && r > a)) throw std::overflow_error("discriminant: exceeds 128 bits");
    return r;
}

// Fraction-free Bareiss determinant of the Sylvester matrix of (f, f').
i128 sylvester_resultant(const std::vector<i128>& fc, const std::vector<i128>& gc) {
    int df = (int)fc.size() - 1, dg = (int)gc.size() - 1;
    int dim = df + dg;
    std::vector<std::vector<i128>> m(dim, std::vector<i128>(dim, 0));
    for (int r = 0; r < dg; ++r)
        for (int i = 0; i <= df; ++i) m[r][r + df - i] = fc[i];
    for (int r = 0; r < df; ++r)
        for (int i = 0; i <= dg; ++i) m[dg + r][r + dg - i] = gc[i];

    i128 prev = 1;
    int sign = 1;
    for (int k = 0; k < dim - 1; ++k) {
        if (m[k][k] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < dim; ++r)
                if (m[r][k] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < dim; ++i) {
            for (int j = k + 1; j < dim; ++j) {
                i128 num = checked_add(checked_mul(m[i][j], m[k][k]), -checked_mul(m[i][k], m[k][j]));
                m[i][j] = num / prev;  // Bareiss: division is exact
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[dim - 1][dim - 1] : -m[dim - 1][dim - 1];
}

}  // namespace

i128 discriminant(const PolyMod& f) {
    if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("discriminant: need a monic polynomial of degree >= 1");
    const int d = f.degree();
    const u64 n = f.modulus;
    if (d == 1) return 1;
    std::vector<i128> fc(d + 1);
    for (int i = 0; i <= d; ++i) fc[i] = symmetric_lift(f.c[i], n);
    if (d == 2) {
        // a^2 - 4b for x^2 + ax + b
        return checked_add(checked_mul(fc[1], fc[1]), -checked_mul(4, fc[0]));
    }
    std::vector<i128> gc(d);
    for (int i = 1; i <= d; ++i) gc[i - 1] = checked_mul(i, fc[i]);
    i128 res = sylvester_resultant(fc, gc);
    // disc = (-1)^(d(d-1)/2) * Res(f, f') for monic f
    int s = (d * (d - 1) / 2) % 2;
    return s ? -res : res;
}

MonicQuadratic MonicQuadratic::make(u64 n, u64 a, u64 b) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("MonicQuadratic: modulus must be odd and >= 3");
    MonicQuadratic q;
    q.n = n;
    q.a = a % n;
    q.b = b % n;
    u128 a2 = (u128)q.a * q.a % n;
    u128 fourb = (u128)4 * q.b % n;
    q.disc_mod = (u64)((a2 + n - fourb) % n);
    q.jacobi_class = jacobi((i128)q.disc_mod, n);
    return q;
}

i128 MonicQuadratic::disc_int() const {
    i128 la = symmetric_lift(a, n), lb = symmetric_lift(b, n);
    return la * la - 4 * lb;
}

}  // namespace frob
