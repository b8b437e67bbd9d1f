#pragma once

#include <string>
#include <vector>

#include "frob/arith.hpp"

namespace frob {

/// Dense polynomial over Z/nZ, constant term first. The zero polynomial is
/// the empty coefficient list; otherwise the leading coefficient is nonzero.
struct PolyMod {
    u64 modulus = 2;
    std::vector<u64> c;

    static PolyMod zero(u64 n) { return PolyMod{n, {}}; }
    static PolyMod one(u64 n);
    static PolyMod x(u64 n);
    static PolyMod from_coeffs(u64 n, std::vector<u64> coeffs);

    int degree() const { return (int)c.size() - 1; }  // -1 for zero
    bool is_zero() const { return c.empty(); }
    bool is_one() const { return c.size() == 1 && c[0] == 1; }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    u64 lead() const { return c.back(); }
    u64 coeff(size_t i) const { return i < c.size() ? c[i] : 0; }
    void normalize();

    bool operator==(const PolyMod&) const = default;
};

std::string poly_to_string(const PolyMod& f);

PolyMod poly_add(const PolyMod& a, const PolyMod& b);
PolyMod poly_sub(const PolyMod& a, const PolyMod& b);
PolyMod poly_mul(const PolyMod& a, const PolyMod& b);
PolyMod poly_scale(const PolyMod& a, u64 k);

/// Division by a monic divisor (no inversions needed). Returns {quotient, remainder}.
std::pair<PolyMod, PolyMod> poly_divrem(const PolyMod& a, const PolyMod& monic_b);

/// u*v reduced modulo (f, n) for monic f.
PolyMod poly_mul_mod(const PolyMod& u, const PolyMod& v, const PolyMod& f);

/// base^e modulo (f, n); the exponent is 128-bit so n^2-sized powers fit.
PolyMod poly_powmod(const PolyMod& base, u128 e, const PolyMod& f);

/// outer(y) evaluated in (Z/nZ)[x]/(f) by Horner's rule.
PolyMod poly_compose_mod(const PolyMod& outer, const PolyMod& y, const PolyMod& f);

/// Euclidean result: either the greatest common monic divisor, or a proper
/// factor of n discovered through a non-invertible leading coefficient.
struct GcmdResult {
    bool factor_found = false;
    PolyMod g;       // valid when !factor_found; monic
    u64 factor = 0;  // valid when factor_found; 1 < factor < n

    bool ok() const { return !factor_found; }
};

GcmdResult gcmd(const PolyMod& g1, const PolyMod& g2);

/// gcd over the field Z/pZ (p prime); always succeeds, result monic (or zero).
PolyMod poly_field_gcd(const PolyMod& a, const PolyMod& b, u64 p);

/// Integer discriminant of a monic polynomial, computed from the coefficient
/// lifts in the symmetric range (-n/2, n/2]. Degree 2 specializes to a^2-4b.
/// Throws std::overflow_error if the exact value leaves 128 bits.
i128 discriminant(const PolyMod& f);

/// x^2 + ax + b over Z/nZ for odd n, carrying its discriminant class.
struct MonicQuadratic {
    u64 n = 3;
    u64 a = 0, b = 0;
    u64 disc_mod = 0;      // a^2 - 4b reduced into [0, n)
    int jacobi_class = 0;  // jacobi(disc_mod, n)

    static MonicQuadratic make(u64 n, u64 a, u64 b);
    PolyMod poly() const { return PolyMod::from_coeffs(n, {b, a, 1}); }
    i128 disc_int() const;  // symmetric-range lift value a^2 - 4b
};

}  // namespace frob
