#include "frob/frobtest.hpp"

#include <numeric>
#include <stdexcept>

namespace frob {

const char* fail_step_name(FailStep s) {
    switch (s) {
        case FailStep::IntegerDivisibility: return "integer_divisibility";
        case FailStep::Factorization: return "factorization";
        case FailStep::Frobenius: return "frobenius";
        case FailStep::Jacobi: return "jacobi";
    }
    return "?";
}

std::string outcome_to_string(const FrobeniusOutcome& o) {
    switch (o.kind) {
        case FrobeniusOutcome::Kind::Pass:
            return std::string("pass(") + (o.jacobi_class > 0 ? "+1" : "-1") + ")";
        case FrobeniusOutcome::Kind::Fail:
            return std::string("fail(") + fail_step_name(o.step) + ")";
        case FrobeniusOutcome::Kind::FactorFound:
            return "factor_found(" + std::to_string(o.factor) + ")";
    }
    return "?";
}

namespace {

void require_odd_n(u64 n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("frobenius test: n must be odd and >= 3");
}

PolyMod x_mod(const PolyMod& f) { return poly_divrem(PolyMod::x(f.modulus), f).second; }

}  // namespace

Frobenius2Trace frobenius2_test_trace(u64 n, const MonicQuadratic& f) {
    require_odd_n(n);
    if (f.n != n) throw std::invalid_argument("frobenius2_test: modulus mismatch");

    Frobenius2Trace tr;
    tr.disc_mod = f.disc_mod;
    tr.F1 = PolyMod::zero(n);
    tr.F2 = PolyMod::zero(n);

    // (1) Integer Divisibility
    u64 f0disc = mulmod(f.b % n, f.disc_mod, n);
    if (std::gcd(n, f0disc) != 1) {
        tr.outcome = FrobeniusOutcome::fail(FailStep::IntegerDivisibility);
        return tr;
    }
    tr.jacobi_symbol = f.jacobi_class;
    tr.steps_completed = 1;

    // (2) Factorization chain
    const PolyMod fp = f.poly();
    const PolyMod X = PolyMod::x(n);
    PolyMod g = poly_powmod(X, n, fp);
    PolyMod A = poly_sub(g, X);
    GcmdResult r1 = gcmd(A, fp);
    if (r1.factor_found) {
        tr.factor_stage = 1;
        tr.outcome = FrobeniusOutcome::split(r1.factor);
        return tr;
    }
    tr.F1 = r1.g;
    auto [f1, rem1] = poly_divrem(fp, tr.F1);
    if (!rem1.is_zero()) {
        tr.outcome = FrobeniusOutcome::fail(FailStep::Factorization);
        return tr;
    }
    if (f1.is_one()) {
        tr.F2 = PolyMod::one(n);
    } else {
        PolyMod xr = x_mod(f1);
        PolyMod h = poly_powmod(X, (u128)n * n, f1);
        PolyMod B = poly_sub(h, xr);
        GcmdResult r2 = gcmd(B, f1);
        if (r2.factor_found) {
            tr.factor_stage = 2;
            tr.outcome = FrobeniusOutcome::split(r2.factor);
            return tr;
        }
        tr.F2 = r2.g;
        auto [f2, rem2] = poly_divrem(f1, tr.F2);
        if (!rem2.is_zero() || !f2.is_one()) {
            tr.outcome = FrobeniusOutcome::fail(FailStep::Factorization);
            return tr;
        }
    }
    tr.have_chain = true;
    tr.steps_completed = 2;

    // (3) Frobenius: F2(x) | F2(x^n)
    if (tr.F2.degree() >= 1) {
        PolyMod y = poly_powmod(X, n, tr.F2);
        PolyMod val = poly_compose_mod(tr.F2, y, tr.F2);
        if (!val.is_zero()) {
            tr.outcome = FrobeniusOutcome::fail(FailStep::Frobenius);
            return tr;
        }
    }
    tr.steps_completed = 3;

    // (4) Jacobi: (-1)^S = jacobi(disc, n), S = deg(F2)/2. A passing Frobenius
    // step forces deg(F2) even (a degree-1 F2 has a root fixed by x -> x^n,
    // which stage 1 already removed).
    if (tr.F2.degree() % 2 != 0) {
        tr.outcome = FrobeniusOutcome::fail(FailStep::Jacobi);
        return tr;
    }
    tr.S = tr.F2.degree() / 2;
    int sign = (tr.S % 2 == 0) ? 1 : -1;
    if (sign != tr.jacobi_symbol) {
        tr.outcome = FrobeniusOutcome::fail(FailStep::Jacobi);
        return tr;
    }
    tr.steps_completed = 4;
    tr.outcome = FrobeniusOutcome::pass(tr.jacobi_symbol);
    return tr;
}

FrobeniusOutcome frobenius2_test(u64 n, const MonicQuadratic& f) {
    return frobenius2_test_trace(n, f).outcome;
}

namespace {

void validate_factorization(const Factorization& nf, u64 n) {
    if (nf.n != n) throw std::invalid_argument("local check: factorization is for a different n");
    if (nf.product() != n) throw std::invalid_argument("local check: factorization product mismatch");
    u64 prev = 0;
    for (const auto& [p, r] : nf.factors) {
        if (p <= prev || r < 1 || !is_prime(p))
            throw std::invalid_argument("local check: invalid factorization entry");
        prev = p;
    }
}

u64 pow_u64(u64 p, int r) {
    u64 m = 1;
    while (r-- > 0) m *= p;
    return m;
}

}  // namespace

FrobeniusOutcome frobenius2_local_check(const Factorization& nf, const MonicQuadratic& f) {
    const u64 n = f.n;
    require_odd_n(n);
    validate_factorization(nf, n);

    // Integer Divisibility: disc a unit mod n and 0 not a root mod any p.
    for (const auto& [p, r] : nf.factors) {
        if (f.disc_mod % p == 0 || f.b % p == 0)
            return FrobeniusOutcome::fail(FailStep::IntegerDivisibility);
    }
    const int jc = f.jacobi_class;

    struct Local {
        u64 m;
        PolyMod fm, xr, g;  // g = x^n mod (f, m)
    };
    std::vector<Local> locals;
    locals.reserve(nf.factors.size());
    for (const auto& [p, r] : nf.factors) {
        u64 m = pow_u64(p, r);
        PolyMod fm = PolyMod::from_coeffs(m, {f.b, f.a, 1});
        PolyMod xr = PolyMod::x(m);
        PolyMod g = poly_powmod(xr, n, fm);
        locals.push_back({m, std::move(fm), std::move(xr), std::move(g)});
    }

    if (jc == 1) {
        // gcmd(x^n - x, f) = f at every prime power, i.e. f | x^n - x.
        for (const auto& L : locals)
            if (L.g != L.xr) return FrobeniusOutcome::fail(FailStep::Factorization);
        return FrobeniusOutcome::pass(1);
    }

    // jc == -1: the four local conditions.
    // Factorization 1: gcmd(x^n - x, f) = 1 at every prime power. The ideal
    // (A, f) is the unit ideal exactly when gcd(A, f) = 1 over Z/pZ.
    for (size_t i = 0; i < locals.size(); ++i) {
        const u64 p = nf.factors[i].first;
        PolyMod A = poly_sub(locals[i].g, locals[i].xr);
        PolyMod Ap = PolyMod::from_coeffs(p, A.c);
        if (Ap.is_zero() || poly_field_gcd(Ap, PolyMod::from_coeffs(p, locals[i].fm.c), p).degree() != 0)
            return FrobeniusOutcome::fail(FailStep::Factorization);
    }
    // Factorization 2: f | x^(n^2) - x at every prime power.
    for (const auto& L : locals) {
        PolyMod h = poly_powmod(L.g, n, L.fm);  // (x^n)^n = x^(n^2)
        if (h != L.xr) return FrobeniusOutcome::fail(FailStep::Factorization);
    }
    // Frobenius: every root alpha of f mod p^r has f(alpha^n) = 0; with
    // alpha = x in (Z/p^r)[x]/(f) this is f(x^n) = 0 in the quotient.
    for (const auto& L : locals) {
        PolyMod val = poly_compose_mod(L.fm, L.g, L.fm);
        if (!val.is_zero()) return FrobeniusOutcome::fail(FailStep::Frobenius);
    }
    return FrobeniusOutcome::pass(-1);
}

FrobeniusOutcome frobenius_d_test(u64 n, const PolyMod& f, int degree_cap) {
    require_odd_n(n);
    if (f.modulus != n) throw std::invalid_argument("frobenius_d_test: modulus mismatch");
    const int d = f.degree();
    if (d < 1) throw std::invalid_argument("frobenius_d_test: degree must be >= 1");
    if (d > degree_cap) throw std::invalid_argument("frobenius_d_test: degree exceeds cap");
    if (!f.is_monic()) throw std::invalid_argument("frobenius_d_test: polynomial must be monic");

    // (1) Integer Divisibility
    i128 D = discriminant(f);
    i128 dm = D % (i128)n;
    if (dm < 0) dm += n;
    u64 disc_mod = (u64)dm;
    u64 f0disc = mulmod(f.coeff(0), disc_mod, n);
    if (std::gcd(n, f0disc) != 1) return FrobeniusOutcome::fail(FailStep::IntegerDivisibility);
    const int jc = jacobi((i128)disc_mod, n);

    // (2) Factorization chain F_i = gcmd(x^(n^i) - x, f_{i-1})
    const PolyMod X = PolyMod::x(n);
    std::vector<PolyMod> F(d + 1, PolyMod::one(n));
    PolyMod fi = f;
    for (int i = 1; i <= d; ++i) {
        if (fi.is_one()) continue;
        PolyMod xr = poly_divrem(X, fi).second;
        PolyMod t = xr;
        for (int j = 0; j < i; ++j) t = poly_powmod(t, n, fi);  // x^(n^i) mod (f_i, n)
        PolyMod A = poly_sub(t, xr);
        GcmdResult r = gcmd(A, fi);
        if (r.factor_found) return FrobeniusOutcome::split(r.factor);
        F[i] = r.g;
        auto [next, rem] = poly_divrem(fi, F[i]);
        if (!rem.is_zero()) return FrobeniusOutcome::fail(FailStep::Factorization);
        fi = next;
    }
    if (!fi.is_one()) return FrobeniusOutcome::fail(FailStep::Factorization);

    // (3) Frobenius for stages 2..d
    for (int i = 2; i <= d; ++i) {
        if (F[i].degree() < 1) continue;
        PolyMod y = poly_powmod(poly_divrem(X, F[i]).second, n, F[i]);
        PolyMod val = poly_compose_mod(F[i], y, F[i]);
        if (!val.is_zero()) return FrobeniusOutcome::fail(FailStep::Frobenius);
    }

    // (4) Jacobi: S = sum over even i of deg(F_i)/i, taken literally. A
    // fractional S can only arise for composite n and can never equal +-1's
    // exponent parity, so it fails here.
    long long num = 0, denom = 1;
    for (int i = 2; i <= d; i += 2) denom = std::lcm(denom, (long long)i);
    for (int i = 2; i <= d; i += 2) num += (long long)F[i].degree() * (denom / i);
    if (num % denom != 0) return FrobeniusOutcome::fail(FailStep::Jacobi);
    long long S = num / denom;
    int sign = (S % 2 == 0) ? 1 : -1;
    if (sign != jc) return FrobeniusOutcome::fail(FailStep::Jacobi);
    return FrobeniusOutcome::pass(jc);
}

}  // namespace frob
