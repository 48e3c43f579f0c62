#pragma once

#include <map>
#include <vector>

#include "cakecut/allocation.hpp"
#include "cakecut/piece.hpp"
#include "cakecut/valuation.hpp"

namespace cakecut {

// Exact verification oracles. These read densities directly and never touch
// the query ledger; their evals are not protocol queries.

struct EnvyViolation {
    int envious;
    int envied;
    Rational deficit;  // v_i(S_j) - v_i(S_i) > 0
};

struct EnvyReport {
    std::vector<EnvyViolation> violations;
    bool envy_free() const { return violations.empty(); }
};

inline EnvyReport check_envy_free(const PartialAllocation& a,
                                  const std::map<int, Valuation>& vals) {
    EnvyReport report;
    for (const auto& [i, vi] : vals) {
        Rational own = vi.value(a.share(i));
        for (const auto& [j, vj] : vals) {
            (void)vj;
            if (i == j) continue;
            Rational other = vi.value(a.share(j));
            if (other > own) report.violations.push_back({i, j, other - own});
        }
    }
    return report;
}

// Shares tile the cake exactly: pairwise interior-disjoint, union equal.
inline bool check_complete(const PartialAllocation& a, const Piece& cake) {
    Piece u;
    Rational total(0);
    for (const auto& [agent, p] : a.shares) {
        (void)agent;
        u = piece_union(u, p);
        total += p.measure();
    }
    return u == cake && total == cake.measure();
}

struct ProportionalityViolation {
    int agent;
    Rational got;
    Rational fair_share;
};

struct ProportionalityReport {
    std::vector<ProportionalityViolation> violations;
    bool proportional() const { return violations.empty(); }
};

inline ProportionalityReport check_proportional(const PartialAllocation& a,
                                                const std::map<int, Valuation>& vals,
                                                const Piece& cake) {
    ProportionalityReport report;
    auto n = static_cast<long>(vals.size());
    for (const auto& [i, vi] : vals) {
        Rational got = vi.value(a.share(i));
        Rational fair = vi.value(cake) / n;
        if (got < fair) report.violations.push_back({i, got, fair});
    }
    return report;
}

}  // namespace cakecut
