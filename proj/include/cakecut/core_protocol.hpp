#pragma once

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cakecut/engine.hpp"
#include "cakecut/errors.hpp"
#include "cakecut/piece.hpp"

namespace cakecut {

struct SubcoreResult {
    // agent -> (input piece index, allocated piece in final trimmed state)
    std::map<int, std::pair<int, Piece>> assigned;
    Piece trimmings;               // union of all removed parts
    std::vector<int> unallocated;  // input piece indices left unassigned
    std::vector<Piece> final_state;
    std::vector<bool> trimmed;
};

namespace subcore_detail {

// The selection engine. Agents take their best complete pool piece; whenever
// somebody values another piece strictly above his own share, he trims that
// piece down to his own level (one cut query), and a holder whose share sank
// below the pool swaps back to the pool. Trims are never undone while the
// loop runs, so the piece states descend monotonically until nobody envies
// anything. Only at commit time may a piece's marks be forgotten (handing it
// out whole) when its complete form bothers no one — cut marks are
// information, not commitments.
class ServeLoop {
  public:
    ServeLoop(Engine& eng, const std::vector<Piece>& pieces, const std::vector<int>& agents)
        : eng_(eng),
          input_(pieces),
          agents_(agents),
          n_(static_cast<int>(pieces.size())),
          k_(static_cast<int>(agents.size())),
          current_(pieces),
          holder_(pieces.size(), -1),
          held_(agents.size(), -1) {}

    SubcoreResult run() {
        const bool dbg = std::getenv("CAKECUT_SUBCORE_DEBUG") != nullptr;
        const long soft_cap = 16 + 4L * n_ * k_;
        const long round_cap = 128 + 64L * n_ * k_;
        const long cut_start = eng_.oracle.ledger().cut_count;
        const BigInt half_budget = query_bound_Q(k_) / 2;
        for (long round = 0;; ++round) {
            if (round > round_cap) throw ProtocolError("subcore exceeded its round budget");
            if (replans_ == 0 &&
                (round == soft_cap ||
                 (k_ >= 4 &&
                  BigInt(eng_.oracle.ledger().cut_count - cut_start) >= half_budget)))
                replan();
            if (dbg) dump(round);
            if (serve_somebody()) continue;
            if (resolve_envy()) continue;
            if (auto out = try_finish()) return *out;
        }
    }

  private:
    Rational value(int a, const Piece& p) const {
        return eng_.oracle.value(agents_[static_cast<std::size_t>(a)], p);
    }

    const Piece& state(int p) const { return current_[static_cast<std::size_t>(p)]; }

    bool is_whole(int p) const {
        return current_[static_cast<std::size_t>(p)] == input_[static_cast<std::size_t>(p)];
    }

    void restore(int p) {
        current_[static_cast<std::size_t>(p)] = input_[static_cast<std::size_t>(p)];
    }

    void take(int a, int p) {
        held_[static_cast<std::size_t>(a)] = p;
        holder_[static_cast<std::size_t>(p)] = a;
    }

    void drop(int a) {
        holder_[static_cast<std::size_t>(held_[static_cast<std::size_t>(a)])] = -1;
        held_[static_cast<std::size_t>(a)] = -1;
    }

    // Unserved agents take the best unallocated piece; holders whose share
    // fell strictly below an unallocated piece swap onto it. Smallest agent
    // first, ties to the smallest piece index.
    bool serve_somebody() {
        for (int a = 0; a < k_; ++a) {
            int own = held_[static_cast<std::size_t>(a)];
            Rational own_value =
                own < 0 ? Rational(-1) : value(a, state(own));
            int best = -1;
            Rational best_value(-1);
            for (int p = 0; p < n_; ++p) {
                if (holder_[static_cast<std::size_t>(p)] != -1) continue;
                Rational v = value(a, state(p));
                if (v > best_value) {
                    best_value = v;
                    best = p;
                }
            }
            if (best >= 0 && best_value > own_value) {
                if (own >= 0) drop(a);
                take(a, best);
                return true;
            }
            if (own < 0) {
                if (best < 0) throw ProtocolError("subcore: no piece left to serve an agent");
                take(a, best);
                return true;
            }
        }
        return false;
    }

    // Lexicographically first envious pair: agent z values piece p strictly
    // above his own share. Both sides mark p — z down to his own level, the
    // holder down to his best unallocated fallback — and the piece is cut at
    // the shallower mark and goes to the deeper marker: either the holder
    // defends it at z's level (z is exactly compensated), or z takes it at
    // the holder's level and the holder falls back on the pool. A piece
    // nobody holds is simply cut down to z's level.
    bool resolve_envy() {
        // Enviers with the lowest own level first: their constraints bind
        // deepest and, once applied, later trims cannot reopen them.
        std::vector<int> order(static_cast<std::size_t>(k_));
        for (int z = 0; z < k_; ++z) order[static_cast<std::size_t>(z)] = z;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            Rational va = value(a, state(held_[static_cast<std::size_t>(a)]));
            Rational vb = value(b, state(held_[static_cast<std::size_t>(b)]));
            return va < vb || (va == vb && a < b);
        });
        for (int z : order) {
            Rational own = value(z, state(held_[static_cast<std::size_t>(z)]));
            for (int p = 0; p < n_; ++p) {
                if (p == held_[static_cast<std::size_t>(z)]) continue;
                if (value(z, state(p)) <= own) continue;

                int h = holder_[static_cast<std::size_t>(p)];
                if (h == -1 || replans_ > 0) {
                    // Free pieces, and every piece once the assignment has
                    // been replanned, are simply cut down to z's level.
                    auto [z_mark, z_kept] = eng_.oracle.cut_from_right(
                        agents_[static_cast<std::size_t>(z)], state(p), own);
                    (void)z_mark;
                    current_[static_cast<std::size_t>(p)] = z_kept;
                    return true;
                }
                // The holder's fallback: the best unallocated piece or the
                // envier's piece, which a transfer would release to him.
                Rational fallback = value(h, state(held_[static_cast<std::size_t>(z)]));
                for (int q = 0; q < n_; ++q)
                    if (holder_[static_cast<std::size_t>(q)] == -1 &&
                        value(h, state(q)) > fallback)
                        fallback = value(h, state(q));
                if (value(h, state(p)) <= fallback) {
                    // The holder would rather fall back: hand p over as is.
                    drop(h);
                    drop(z);
                    take(z, p);
                    return true;
                }
                auto [z_mark, z_kept] = eng_.oracle.cut_from_right(
                    agents_[static_cast<std::size_t>(z)], state(p), own);
                auto [h_mark, h_kept] = eng_.oracle.cut_from_right(
                    agents_[static_cast<std::size_t>(h)], state(p), fallback);
                (void)h_kept;
                if (z_mark > h_mark) {
                    // z bids deeper: he takes p at the holder's mark.
                    current_[static_cast<std::size_t>(p)] =
                        piece_clip(state(p), h_mark, Rational(1));
                    drop(h);
                    drop(z);
                    take(z, p);
                } else {
                    current_[static_cast<std::size_t>(p)] = z_kept;
                }
                return true;
            }
        }
        return false;
    }

    // Everyone values the restored form of piece p at most as much as their
    // own share, except possibly `except`.
    bool restorable(int p, int except) const {
        for (int z = 0; z < k_; ++z) {
            if (z == except) continue;
            if (value(z, input_[static_cast<std::size_t>(p)]) >
                value(z, state(held_[static_cast<std::size_t>(z)])))
                return false;
        }
        return true;
    }

    // No envy anywhere and everyone served. The allocation commits once some
    // complete piece is left over and some complete piece is held.
    std::optional<SubcoreResult> try_finish() {
        bool whole_left = false;
        for (int p = 0; p < n_ && !whole_left; ++p)
            whole_left = holder_[static_cast<std::size_t>(p)] == -1 && is_whole(p);
        if (!whole_left) {
            // Forget the marks of a leftover nobody minds restored.
            for (int p = 0; p < n_ && !whole_left; ++p) {
                if (holder_[static_cast<std::size_t>(p)] != -1) continue;
                if (restorable(p, -1)) {
                    restore(p);
                    whole_left = true;
                }
            }
        }
        if (!whole_left) {
            // Somebody still wants a trimmed leftover whole: give it to him
            // when nobody else minds; his old piece joins the leftovers.
            for (int p = 0; p < n_ && !whole_left; ++p) {
                if (holder_[static_cast<std::size_t>(p)] != -1) continue;
                for (int z = 0; z < k_ && !whole_left; ++z) {
                    if (value(z, input_[static_cast<std::size_t>(p)]) <=
                        value(z, state(held_[static_cast<std::size_t>(z)])))
                        continue;
                    if (!restorable(p, z)) continue;
                    drop(z);
                    restore(p);
                    take(z, p);
                    return std::nullopt;
                }
            }
            // Free a complete piece by moving its holder sideways onto a
            // leftover he ties exactly.
            for (int a = 0; a < k_ && !whole_left; ++a) {
                if (!is_whole(held_[static_cast<std::size_t>(a)])) continue;
                Rational own = value(a, state(held_[static_cast<std::size_t>(a)]));
                for (int q = 0; q < n_ && !whole_left; ++q) {
                    if (holder_[static_cast<std::size_t>(q)] != -1) continue;
                    if (value(a, state(q)) == own) {
                        drop(a);
                        take(a, q);
                        whole_left = true;
                    }
                }
            }
            // Or grow a trimmed leftover back to exactly such a holder's
            // level, provided nobody else minds that state, and swap him on.
            for (int a = 0; a < k_ && !whole_left; ++a) {
                if (!is_whole(held_[static_cast<std::size_t>(a)])) continue;
                Rational own = value(a, state(held_[static_cast<std::size_t>(a)]));
                for (int q = 0; q < n_ && !whole_left; ++q) {
                    if (holder_[static_cast<std::size_t>(q)] != -1) continue;
                    if (value(a, input_[static_cast<std::size_t>(q)]) < own) continue;
                    auto [mark, grown] = eng_.oracle.cut_from_right(
                        agents_[static_cast<std::size_t>(a)],
                        input_[static_cast<std::size_t>(q)], own);
                    (void)mark;
                    bool ok = true;
                    for (int z = 0; z < k_ && ok; ++z)
                        if (z != a &&
                            value(z, grown) >
                                value(z, state(held_[static_cast<std::size_t>(z)])))
                            ok = false;
                    if (!ok) continue;
                    current_[static_cast<std::size_t>(q)] = grown;
                    drop(a);
                    take(a, q);
                    whole_left = true;
                }
            }
            if (!whole_left) return reauction_coveted();
        }

        bool whole_held = false;
        for (int a = 0; a < k_ && !whole_held; ++a)
            whole_held = is_whole(held_[static_cast<std::size_t>(a)]);
        if (!whole_held) {
            for (int a = 0; a < k_ && !whole_held; ++a) {
                int p = held_[static_cast<std::size_t>(a)];
                if (restorable(p, a)) {
                    restore(p);
                    whole_held = true;
                }
            }
        }
        if (!whole_held) {
            // Move an agent sideways onto a complete leftover he ties — but
            // only when the leftover side survives: another complete piece is
            // free, or his released piece can be restored unopposed.
            for (int a = 0; a < k_ && !whole_held; ++a) {
                int old = held_[static_cast<std::size_t>(a)];
                Rational own = value(a, state(old));
                for (int p = 0; p < n_ && !whole_held; ++p) {
                    if (holder_[static_cast<std::size_t>(p)] != -1 || !is_whole(p)) continue;
                    if (value(a, state(p)) != own) continue;
                    bool other_whole_free = false;
                    for (int q = 0; q < n_; ++q)
                        if (q != p && holder_[static_cast<std::size_t>(q)] == -1 && is_whole(q))
                            other_whole_free = true;
                    bool old_restorable = restorable(old, a) &&
                                          value(a, input_[static_cast<std::size_t>(old)]) <= own;
                    if (!other_whole_free && !old_restorable) continue;
                    drop(a);
                    take(a, p);
                    if (!other_whole_free) restore(old);
                    whole_held = true;
                }
            }
        }
        if (!whole_held) {
            // Two holders exchange their pieces, both restored, when the
            // trade loses neither of them anything and everyone else
            // tolerates both complete pieces.
            for (int a = 0; a < k_ && !whole_held; ++a) {
                for (int b = a + 1; b < k_ && !whole_held; ++b) {
                    int pa = held_[static_cast<std::size_t>(a)];
                    int pb = held_[static_cast<std::size_t>(b)];
                    const Piece& wa = input_[static_cast<std::size_t>(pa)];
                    const Piece& wb = input_[static_cast<std::size_t>(pb)];
                    if (value(a, wb) < value(a, state(pa)) || value(a, wb) < value(a, wa))
                        continue;
                    if (value(b, wa) < value(b, state(pb)) || value(b, wa) < value(b, wb))
                        continue;
                    bool ok = true;
                    for (int z = 0; z < k_ && ok; ++z) {
                        if (z == a || z == b) continue;
                        Rational own_z = value(z, state(held_[static_cast<std::size_t>(z)]));
                        ok = value(z, wa) <= own_z && value(z, wb) <= own_z;
                    }
                    if (!ok) continue;
                    drop(a);
                    drop(b);
                    restore(pa);
                    restore(pb);
                    take(a, pb);
                    take(b, pa);
                    whole_held = true;
                }
            }
        }
        if (!whole_held && replans_ >= 2) {
            // Terminal (d)-repair once gentler replans are spent: the agent
            // with the smallest positive gap to a complete leftover trims
            // everything he values above it and moves onto it.
            int z0 = -1, target = -1;
            Rational best_gap(-1);
            for (int a = 0; a < k_; ++a) {
                Rational own = value(a, state(held_[static_cast<std::size_t>(a)]));
                for (int p = 0; p < n_; ++p) {
                    if (holder_[static_cast<std::size_t>(p)] != -1 || !is_whole(p)) continue;
                    Rational gap = own - value(a, state(p));
                    if (gap > 0 && (z0 < 0 || gap < best_gap)) {
                        z0 = a;
                        target = p;
                        best_gap = gap;
                    }
                }
            }
            if (z0 >= 0) {
                Rational level = value(z0, state(target));
                for (int p = 0; p < n_; ++p) {
                    if (value(z0, state(p)) <= level) continue;
                    auto [mark, kept] = eng_.oracle.cut_from_right(
                        agents_[static_cast<std::size_t>(z0)], state(p), level);
                    (void)mark;
                    current_[static_cast<std::size_t>(p)] = kept;
                }
                drop(z0);
                take(z0, target);
                return std::nullopt;
            }
        }
        if (!whole_held) return reauction_coveted();

        // Repairs may have shuffled holdings; both conditions must hold on
        // the final state together.
        bool final_whole_left = false;
        for (int p = 0; p < n_; ++p)
            if (holder_[static_cast<std::size_t>(p)] == -1 && is_whole(p))
                final_whole_left = true;
        if (!final_whole_left) return std::nullopt;

        SubcoreResult out;
        out.final_state = current_;
        out.trimmed.assign(static_cast<std::size_t>(n_), false);
        for (int p = 0; p < n_; ++p)
            out.trimmed[static_cast<std::size_t>(p)] = !is_whole(p);
        for (int a = 0; a < k_; ++a) {
            int p = held_[static_cast<std::size_t>(a)];
            out.assigned[agents_[static_cast<std::size_t>(a)]] = {p, state(p)};
        }
        for (int p = 0; p < n_; ++p)
            if (holder_[static_cast<std::size_t>(p)] == -1) out.unallocated.push_back(p);
        Piece all_input, all_final;
        for (const auto& p : input_) all_input = piece_union(all_input, p);
        for (const auto& p : current_) all_final = piece_union(all_final, p);
        out.trimmings = piece_subtract(all_input, all_final);
        return out;
    }

    // The local dynamics went down a bad path: forget every mark, hand each
    // agent his piece from a maximum-weight matching on the complete-piece
    // values (all known since the pieces were cut), and let the envy loop
    // settle the trims from the top. Weights are normalized per agent — what
    // matters for envy is how close each agent sits to his personal best, not
    // absolute value. Leftovers of the matching start whole and unloved,
    // which is what the completeness requirements want.
    void replan() {
        ++replans_;
        reauctions_ = 0;
        for (int a = 0; a < k_; ++a)
            if (held_[static_cast<std::size_t>(a)] >= 0) drop(a);
        for (int p = 0; p < n_; ++p) restore(p);

        // Weight heuristics, one per replan attempt: how close the piece is
        // to the agent's personal best, then the agent's share of the piece's
        // total demand, then the raw value.
        std::vector<std::vector<Rational>> weight(static_cast<std::size_t>(k_));
        for (int a = 0; a < k_; ++a) {
            Rational top(0);
            for (int p = 0; p < n_; ++p)
                if (value(a, input_[static_cast<std::size_t>(p)]) > top)
                    top = value(a, input_[static_cast<std::size_t>(p)]);
            for (int p = 0; p < n_; ++p) {
                Rational v = value(a, input_[static_cast<std::size_t>(p)]);
                if (replans_ == 1) {
                    weight[static_cast<std::size_t>(a)].push_back(top == 0 ? Rational(1)
                                                                           : v / top);
                } else if (replans_ == 2) {
                    Rational demand(0);
                    for (int z = 0; z < k_; ++z)
                        demand += value(z, input_[static_cast<std::size_t>(p)]);
                    weight[static_cast<std::size_t>(a)].push_back(
                        demand == 0 ? Rational(1) : v / demand);
                } else {
                    weight[static_cast<std::size_t>(a)].push_back(v);
                }
            }
        }

        // dp over piece subsets, agents in index order; ties prefer the
        // lexicographically smallest assignment.
        auto nm = static_cast<std::size_t>(1) << n_;
        std::vector<std::vector<Rational>> best(static_cast<std::size_t>(k_) + 1,
                                                std::vector<Rational>(nm, Rational(-1)));
        std::vector<std::vector<int>> choice(static_cast<std::size_t>(k_) + 1,
                                             std::vector<int>(nm, -1));
        best[0][0] = 0;
        for (int a = 0; a < k_; ++a) {
            for (std::size_t mask = 0; mask < nm; ++mask) {
                if (best[static_cast<std::size_t>(a)][mask] < 0) continue;
                for (int p = 0; p < n_; ++p) {
                    if (mask & (static_cast<std::size_t>(1) << p)) continue;
                    std::size_t next = mask | (static_cast<std::size_t>(1) << p);
                    Rational cand = best[static_cast<std::size_t>(a)][mask] +
                                    weight[static_cast<std::size_t>(a)][static_cast<std::size_t>(p)];
                    if (cand > best[static_cast<std::size_t>(a) + 1][next]) {
                        best[static_cast<std::size_t>(a) + 1][next] = cand;
                        choice[static_cast<std::size_t>(a) + 1][next] = p;
                    }
                }
            }
        }
        std::size_t arg = 0;
        Rational top(-1);
        for (std::size_t mask = 0; mask < nm; ++mask)
            if (best[static_cast<std::size_t>(k_)][mask] > top) {
                top = best[static_cast<std::size_t>(k_)][mask];
                arg = mask;
            }
        for (int a = k_ - 1; a >= 0; --a) {
            int p = choice[static_cast<std::size_t>(a) + 1][arg];
            take(a, p);
            arg &= ~(static_cast<std::size_t>(1) << p);
        }
    }

    // Completeness deadlock: some trimmed piece is still coveted whole (were
    // none, the restorable repairs above would have fired). Re-auction such a
    // piece in one shot: every other claimant marks the restored piece down
    // to his own level, and the piece goes to a claimant who still gains at
    // the deepest mark. His gain strictly raises his share, weakening his
    // other objections. Unheld pieces first so nobody gets displaced.
    std::optional<SubcoreResult> reauction_coveted() {
        if (++reauctions_ > 2L * n_ * k_) {
            if (replans_ >= 3) throw ProtocolError("subcore: completeness repairs are cycling");
            replan();
            return std::nullopt;
        }
        for (int pass = 0; pass < 2; ++pass) {
            for (int p = 0; p < n_; ++p) {
                if (is_whole(p)) continue;
                bool unheld = holder_[static_cast<std::size_t>(p)] == -1;
                if ((pass == 0) != unheld) continue;
                for (int z = 0; z < k_; ++z) {
                    Rational own_z = value(z, state(held_[static_cast<std::size_t>(z)]));
                    if (value(z, input_[static_cast<std::size_t>(p)]) <= own_z) continue;
                    Rational deepest(-1);
                    for (int y = 0; y < k_; ++y) {
                        if (y == z) continue;
                        Rational own_y = value(y, state(held_[static_cast<std::size_t>(y)]));
                        if (value(y, input_[static_cast<std::size_t>(p)]) <= own_y) continue;
                        auto [mark, kept] = eng_.oracle.cut_from_right(
                            agents_[static_cast<std::size_t>(y)],
                            input_[static_cast<std::size_t>(p)], own_y);
                        (void)kept;
                        if (mark > deepest) deepest = mark;
                    }
                    Piece final_p = deepest < 0
                                        ? input_[static_cast<std::size_t>(p)]
                                        : piece_clip(input_[static_cast<std::size_t>(p)],
                                                     deepest, Rational(1));
                    if (value(z, final_p) <= own_z) continue;  // unproductive
                    int h = holder_[static_cast<std::size_t>(p)];
                    if (h >= 0 && h != z) drop(h);
                    if (held_[static_cast<std::size_t>(z)] != p) {
                        drop(z);
                        take(z, p);
                    }
                    current_[static_cast<std::size_t>(p)] = final_p;
                    return std::nullopt;
                }
            }
        }
        if (replans_ >= 3) throw ProtocolError("subcore: no path to a complete piece");
        replan();
        return std::nullopt;
    }

    void dump(long round) const {
        std::cerr << "== r" << round << " holders:";
        for (int p = 0; p < n_; ++p) std::cerr << " " << holder_[static_cast<std::size_t>(p)];
        std::cerr << " whole:";
        for (int p = 0; p < n_; ++p)
            if (is_whole(p)) std::cerr << " " << p;
        std::cerr << "\n";
        for (int a = 0; a < k_; ++a) {
            std::cerr << "  ag" << agents_[static_cast<std::size_t>(a)] << " held="
                      << held_[static_cast<std::size_t>(a)] << " vals:";
            for (int p = 0; p < n_; ++p) std::cerr << " " << value(a, state(p)).get_d();
            std::cerr << "\n";
        }
    }

    Engine& eng_;
    const std::vector<Piece>& input_;
    const std::vector<int>& agents_;
    int n_;
    int k_;
    std::vector<Piece> current_;
    std::vector<int> holder_;  // piece -> agent index or -1
    std::vector<int> held_;    // agent index -> piece or -1
    int replans_ = 0;
    long reauctions_ = 0;
};

}  // namespace subcore_detail

// Envy-free selection of (possibly left-trimmed) pieces for `agents` out of
// `pieces`, |pieces| > |agents|. An auction matches every agent to a piece of
// personal maximum value over the current trim states; contested pieces are
// trimmed down to the contestants' fallback values second-price style, pieces
// nobody holds revert to their complete form. At exit every agent sits at a
// personal maximum over all pieces, one agent holds a complete input piece,
// and at least one complete piece is left over.
inline SubcoreResult subcore(Engine& eng, const std::vector<Piece>& pieces,
                             const std::vector<int>& agents) {
    const int n = static_cast<int>(pieces.size());
    const int k = static_cast<int>(agents.size());
    if (k >= n) throw ProtocolError("subcore needs more pieces than agents");
    if (k == 0) {
        SubcoreResult out;
        out.final_state = pieces;
        out.trimmed.assign(static_cast<std::size_t>(n), false);
        for (int p = 0; p < n; ++p) out.unallocated.push_back(p);
        return out;
    }
    return subcore_detail::ServeLoop(eng, pieces, agents).run();
}

struct CoreResult {
    std::map<int, Piece> shares;
    Piece residue;
    int cutter = 0;
    bool zero_residue = false;
};

// Core Protocol: the cutter splits R into |N| pieces of equal own value
// (|N|-1 cut queries), SubCore allocates possibly-trimmed pieces to the other
// agents, and the cutter takes an untouched leftover piece. The cutter and at
// least one other agent end with exactly v_cutter(R)/|N| by the cutter's
// valuation; the residue is what the trims removed.
inline CoreResult core(Engine& eng, const Piece& R, const std::vector<int>& N, int cutter) {
    if (N.size() < 2) throw ProtocolError("core needs at least two agents");
    if (std::find(N.begin(), N.end(), cutter) == N.end())
        throw ProtocolError("cutter must be one of the agents");

    CoreResult out;
    out.cutter = cutter;
    for (int a : N) out.shares[a] = Piece{};
    if (eng.oracle.value(cutter, R) == 0) {
        // Degenerate: the cutter cannot split a zero-value residue; callers
        // treat this as terminal for the cutter.
        out.residue = R;
        out.zero_residue = true;
        return out;
    }

    auto pieces = eng.oracle.cut_equal(cutter, R, static_cast<int>(N.size()));
    std::vector<int> others;
    for (int a : N)
        if (a != cutter) others.push_back(a);
    auto sub = subcore(eng, pieces, others);

    int cutter_ix = -1;
    for (int ix : sub.unallocated)
        if (!sub.trimmed[static_cast<std::size_t>(ix)]) {
            cutter_ix = ix;
            break;
        }
    if (cutter_ix < 0) throw ProtocolError("subcore left no complete piece for the cutter");
    out.shares[cutter] = sub.final_state[static_cast<std::size_t>(cutter_ix)];
    for (const auto& [agent, pr] : sub.assigned) out.shares[agent] = pr.second;

    Piece allocated;
    for (const auto& [agent, p] : out.shares) {
        (void)agent;
        allocated = piece_union(allocated, p);
    }
    out.residue = piece_subtract(R, allocated);
    return out;
}

}  // namespace cakecut
