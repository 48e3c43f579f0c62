#pragma once

#include <map>

#include "cakecut/piece.hpp"

namespace cakecut {

// A partial division: per-agent shares plus the still-undivided residue.
// Invariant maintained by the engine: shares and residue are pairwise
// interior-disjoint and their union is exactly `cake`.
struct PartialAllocation {
    std::map<int, Piece> shares;
    Piece residue;
    Piece cake;

    const Piece& share(int agent) const {
        static const Piece kEmpty{};
        auto it = shares.find(agent);
        return it == shares.end() ? kEmpty : it->second;
    }

    void add_share(int agent, const Piece& p) {
        if (p.empty()) return;
        shares[agent] = piece_union(shares[agent], p);
    }

    void absorb_shares(const PartialAllocation& other) {
        for (const auto& [agent, p] : other.shares) add_share(agent, p);
    }
};

// Exact partition check: shares and residue tile the cake with disjoint
// interiors. Union equality plus measure additivity pins both properties.
inline bool is_exact_partition(const PartialAllocation& a) {
    Piece u = a.residue;
    Rational total = a.residue.measure();
    for (const auto& [agent, p] : a.shares) {
        u = piece_union(u, p);
        total += p.measure();
    }
    return u == a.cake && total == a.cake.measure();
}

}  // namespace cakecut
