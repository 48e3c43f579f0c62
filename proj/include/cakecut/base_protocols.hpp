#pragma once

#include <array>
#include <vector>

#include "cakecut/allocation.hpp"
#include "cakecut/errors.hpp"
#include "cakecut/oracle.hpp"

namespace cakecut {

inline PartialAllocation divide_trivial(const Piece& R, int agent) {
    PartialAllocation out;
    out.cake = R;
    out.add_share(agent, R);
    return out;
}

// Two agents: i halves R by own value, j takes the preferred half (ties go
// left), i keeps the other. Degenerate v_i(R)=0 hands all of R to j, which
// stays envy-free since i values everything at zero.
inline PartialAllocation cut_and_choose(Oracle& o, const Piece& R, int i, int j) {
    if (j < i) std::swap(i, j);
    PartialAllocation out;
    out.cake = R;
    if (R.empty()) return out;
    if (o.value(i, R) == 0) {
        out.add_share(j, R);
        return out;
    }
    std::vector<Piece> halves = o.cut_equal(i, R, 2);
    bool j_takes_left = o.value(j, halves[0]) >= o.value(j, halves[1]);
    out.add_share(j, halves[j_takes_left ? 0 : 1]);
    out.add_share(i, halves[j_takes_left ? 1 : 0]);
    return out;
}

namespace detail {

// Favorite index among candidate piece indices; ties to the leftmost piece
// (pieces are created in left-to-right order, so smallest index wins).
inline int favorite(Oracle& o, int agent, const std::vector<Piece>& pieces,
                    const std::vector<int>& candidates) {
    int best = candidates.front();
    Rational best_v = o.value(agent, pieces[static_cast<std::size_t>(best)]);
    for (int c : candidates) {
        Rational v = o.value(agent, pieces[static_cast<std::size_t>(c)]);
        if (v > best_v) {
            best = c;
            best_v = v;
        }
    }
    return best;
}

}  // namespace detail

// Selfridge–Conway for three agents, roles by ascending id: p1 trisects,
// p2 trims, choosing order p3, p2 (forced to the trimmed piece), p1; then the
// non-taker of the trimmed piece trisects the trimming with choosing order
// taker, p1, trisector. At most 5 cut queries.
inline PartialAllocation selfridge_conway(Oracle& o, const Piece& R, std::array<int, 3> agents) {
    std::sort(agents.begin(), agents.end());
    const int p1 = agents[0], p2 = agents[1], p3 = agents[2];
    PartialAllocation out;
    out.cake = R;
    if (R.empty()) return out;
    if (o.value(p1, R) == 0) {
        // p1 is indifferent; the other two split R envy-free between them.
        PartialAllocation duo = cut_and_choose(o, R, p2, p3);
        out.absorb_shares(duo);
        return out;
    }

    std::vector<Piece> pieces = o.cut_equal(p1, R, 3);

    // p2's trim: cut his favorite down to his second favorite's value.
    std::vector<int> all{0, 1, 2};
    int fav = detail::favorite(o, p2, pieces, all);
    Rational second(-1);
    for (int c : all) {
        if (c == fav) continue;
        Rational v = o.value(p2, pieces[static_cast<std::size_t>(c)]);
        if (v > second) second = v;
    }
    Piece trimming;
    int trimmed_ix = -1;
    if (o.value(p2, pieces[static_cast<std::size_t>(fav)]) > second) {
        auto [mark, kept] = o.cut_from_right(p2, pieces[static_cast<std::size_t>(fav)], second);
        (void)mark;
        trimming = piece_subtract(pieces[static_cast<std::size_t>(fav)], kept);
        pieces[static_cast<std::size_t>(fav)] = kept;
        trimmed_ix = fav;
    }

    std::vector<int> remaining{0, 1, 2};
    auto take = [&](int agent, int ix) {
        out.add_share(agent, pieces[static_cast<std::size_t>(ix)]);
        remaining.erase(std::find(remaining.begin(), remaining.end(), ix));
    };
    int p3_ix = detail::favorite(o, p3, pieces, remaining);
    take(p3, p3_ix);
    int p2_ix = (trimmed_ix >= 0 && p3_ix != trimmed_ix)
                    ? trimmed_ix
                    : detail::favorite(o, p2, pieces, remaining);
    take(p2, p2_ix);
    take(p1, remaining.front());

    if (!trimming.empty()) {
        const int taker = (p3_ix == trimmed_ix) ? p3 : p2;
        const int other = (taker == p3) ? p2 : p3;
        if (o.value(other, trimming) == 0) {
            // `taker` already holds trimmed-fav; handing it the whole trimming
            // keeps p1 unenvious (trimmed piece + trimming = one original third).
            out.add_share(taker, trimming);
        } else {
            std::vector<Piece> t3 = o.cut_equal(other, trimming, 3);
            std::vector<int> rem{0, 1, 2};
            for (int agent : {taker, p1, other}) {
                int ix = detail::favorite(o, agent, t3, rem);
                out.add_share(agent, t3[static_cast<std::size_t>(ix)]);
                rem.erase(std::find(rem.begin(), rem.end(), ix));
            }
        }
    }
    return out;
}

}  // namespace cakecut
