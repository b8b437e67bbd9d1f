#include "frob/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace frob {

u64 EnumerationReport::classified_total() const {
    u64 t = (u64)(counts.plus + counts.minus);
    for (u64 f : failures_by_step) t += f;
    return t + factor_events;
}

namespace {

struct Partial {
    u64 plus = 0, minus = 0;
    std::array<u64, 4> fails{};
    u64 factor_events = 0;
    std::vector<LiarRecord> liars;
};

Partial classify_rows(u64 n, u64 b_lo, u64 b_hi, bool keep_list) {
    Partial part;
    for (u64 b = b_lo; b < b_hi; ++b) {
        for (u64 a = 0; a < n; ++a) {
            MonicQuadratic f = MonicQuadratic::make(n, a, b);
            FrobeniusOutcome o = frobenius2_test(n, f);
            switch (o.kind) {
                case FrobeniusOutcome::Kind::Pass:
                    if (o.jacobi_class > 0)
                        ++part.plus;
                    else
                        ++part.minus;
                    if (keep_list) part.liars.push_back({a, b, o.jacobi_class});
                    break;
                case FrobeniusOutcome::Kind::Fail:
                    ++part.fails[(size_t)o.step];
                    break;
                case FrobeniusOutcome::Kind::FactorFound:
                    ++part.factor_events;
                    break;
            }
        }
    }
    return part;
}

}  // namespace

EnumerationReport enumerate_liars(u64 n, bool keep_list, int workers, u64 cap) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("enumerate_liars: n must be odd and >= 3");
    if (n > cap) throw std::invalid_argument("enumerate_liars: n exceeds the enumeration cap");
    if (workers < 1) workers = 1;

    std::vector<Partial> parts((size_t)workers);
    if (workers == 1) {
        parts[0] = classify_rows(n, 0, n, keep_list);
    } else {
        std::vector<std::thread> pool;
        u64 chunk = (n + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            u64 lo = std::min<u64>(n, (u64)w * chunk);
            u64 hi = std::min<u64>(n, lo + chunk);
            pool.emplace_back([&parts, w, n, lo, hi, keep_list] { parts[(size_t)w] = classify_rows(n, lo, hi, keep_list); });
        }
        for (auto& t : pool) t.join();
    }

    EnumerationReport rep;
    rep.n = n;
    for (auto& p : parts) {
        rep.counts.plus += p.plus;
        rep.counts.minus += p.minus;
        for (size_t i = 0; i < 4; ++i) rep.failures_by_step[i] += p.fails[i];
        rep.factor_events += p.factor_events;
        rep.liars.insert(rep.liars.end(), p.liars.begin(), p.liars.end());
    }
    std::sort(rep.liars.begin(), rep.liars.end(),
              [](const LiarRecord& x, const LiarRecord& y) { return x.a != y.a ? x.a < y.a : x.b < y.b; });
    return rep;
}

std::vector<u64> fermat_liars(u64 n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("fermat_liars: n must be odd and >= 3");
    std::vector<u64> out;
    for (u64 a = 1; a < n; ++a) {
        if (std::gcd(a, n) != 1) continue;
        if (powmod(a, n - 1, n) == 1) out.push_back(a);
    }
    return out;
}

void write_liar_csv(std::ostream& os, const EnumerationReport& report, bool header) {
    if (header) os << "n,a,b,jacobi_class\n";
    for (const auto& L : report.liars)
        os << report.n << ',' << L.a << ',' << L.b << ',' << L.jacobi_class << '\n';
}

}  // namespace frob
