#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "frob/frobtest.hpp"
#include "frob/liarcount.hpp"

namespace frob {

struct LiarRecord {
    u64 a = 0, b = 0;
    int jacobi_class = 0;
};

/// Exhaustive classification of all n^2 monic quadratics mod n.
struct EnumerationReport {
    u64 n = 0;
    LiarCounts counts;
    std::vector<LiarRecord> liars;            // filled when keep_list, sorted by (a, b)
    std::array<u64, 4> failures_by_step{};    // indexed by FailStep
    u64 factor_events = 0;

    u64 classified_total() const;
    bool partition_ok() const { return classified_total() == (u128)n * n; }
};

inline constexpr u64 kDefaultEnumerationCap = 5000;

/// Runs the degree-2 test on every (a, b) in [0,n)^2. Cost is n^2 tests; n
/// beyond the cap is rejected. The (a, b) grid splits across workers; the
/// merged report does not depend on the worker count.
EnumerationReport enumerate_liars(u64 n, bool keep_list, int workers = 1,
                                  u64 cap = kDefaultEnumerationCap);

/// { a in [1,n) : gcd(a,n) = 1 and a^(n-1) = 1 mod n }, ascending.
std::vector<u64> fermat_liars(u64 n);

/// CSV dump of the liar list: columns n,a,b,jacobi_class.
void write_liar_csv(std::ostream& os, const EnumerationReport& report, bool header = true);

}  // namespace frob
