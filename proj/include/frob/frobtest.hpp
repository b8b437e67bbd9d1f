#pragma once

#include "frob/arith.hpp"
#include "frob/polymod.hpp"

namespace frob {

enum class FailStep { IntegerDivisibility, Factorization, Frobenius, Jacobi };

const char* fail_step_name(FailStep s);

/// Result of running a Frobenius test. Pass for composite n means (f, n) is a
/// liar pair; Fail carries the first failing step in order; FactorFound means
/// the Euclidean algorithm split n while computing a gcmd.
struct FrobeniusOutcome {
    enum class Kind { Pass, Fail, FactorFound };
    Kind kind = Kind::Fail;
    int jacobi_class = 0;                          // set on Pass
    FailStep step = FailStep::IntegerDivisibility; // set on Fail
    u64 factor = 0;                                // set on FactorFound

    bool passed() const { return kind == Kind::Pass; }

    static FrobeniusOutcome pass(int jc) { return {Kind::Pass, jc, FailStep::IntegerDivisibility, 0}; }
    static FrobeniusOutcome fail(FailStep s) { return {Kind::Fail, 0, s, 0}; }
    static FrobeniusOutcome split(u64 d) { return {Kind::FactorFound, 0, FailStep::IntegerDivisibility, d}; }

    bool operator==(const FrobeniusOutcome&) const = default;
};

std::string outcome_to_string(const FrobeniusOutcome& o);

/// Degree-2 test: (1) gcd(n, f(0)*disc) = 1, (2) the F1/F2 gcmd chain ends
/// with f2 = 1, (3) F2(x) | F2(x^n), (4) (-1)^S = jacobi(disc, n) with
/// S = deg(F2)/2. Even n is rejected.
FrobeniusOutcome frobenius2_test(u64 n, const MonicQuadratic& f);

/// Same run with the intermediates kept for display.
struct Frobenius2Trace {
    FrobeniusOutcome outcome;
    int jacobi_symbol = 0;
    u64 disc_mod = 0;
    bool have_chain = false;  // F1/F2 computed (step 1 passed, no factor split)
    PolyMod F1, F2;
    int S = 0;
    int factor_stage = 0;  // 1 or 2 when a gcmd split n
    int steps_completed = 0;
};

Frobenius2Trace frobenius2_test_trace(u64 n, const MonicQuadratic& f);

/// Per-prime-power reformulation used as the independent cross-check path.
/// Branches on jacobi(disc, n): the +1 case checks f | x^n - x locally, the
/// -1 case checks the four local conditions. Never performs Euclidean
/// division, so it never discovers factors.
FrobeniusOutcome frobenius2_local_check(const Factorization& nf, const MonicQuadratic& f);

/// General degree-d test with the F_1..F_d chain, the Frobenius divisibility
/// checks for even stages, and S summed over even i.
FrobeniusOutcome frobenius_d_test(u64 n, const PolyMod& f, int degree_cap = 8);

}  // namespace frob
