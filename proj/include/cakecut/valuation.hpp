#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "cakecut/errors.hpp"
#include "cakecut/piece.hpp"
#include "cakecut/rational.hpp"

namespace cakecut {

struct DensitySegment {
    Rational lo;
    Rational hi;
    Rational density;  // >= 0
};

// Additive, nonnegative, divisible preference realized as a piecewise-constant
// density over [0,1]. Everything is exact; cut points are solved in closed form
// per segment. Minimal-point / maximal-point tie-breaks for plateaus are fixed
// here (and only here) so the whole engine is deterministic.
class Valuation {
  public:
    explicit Valuation(std::vector<DensitySegment> segments) : segs_(std::move(segments)) {
        if (segs_.empty()) throw InputError("valuation with no density segments");
        if (segs_.front().lo != 0 || segs_.back().hi != 1)
            throw InputError("density segments must cover [0,1]");
        for (std::size_t i = 0; i < segs_.size(); ++i) {
            if (segs_[i].lo >= segs_[i].hi) throw InputError("empty density segment");
            if (segs_[i].density < 0) throw InputError("negative density");
            if (i > 0 && segs_[i].lo != segs_[i - 1].hi)
                throw InputError("density segments must be contiguous");
        }
        if (total() == 0) throw InputError("valuation must give [0,1] positive value");
    }

    static Valuation uniform() {
        return Valuation({DensitySegment{Rational(0), Rational(1), Rational(1)}});
    }

    const std::vector<DensitySegment>& segments() const { return segs_; }

    Rational value_interval(const Rational& a, const Rational& b) const {
        Rational out(0);
        if (a >= b) return out;
        for (const auto& s : segs_) {
            if (s.hi <= a) continue;
            if (s.lo >= b) break;
            if (s.density == 0) continue;
            out += s.density * (std::min(s.hi, b) - std::max(s.lo, a));
        }
        return out;
    }

    Rational value(const Piece& p) const {
        Rational out(0);
        for (const auto& iv : p.intervals()) out += value_interval(iv.lo, iv.hi);
        return out;
    }

    Rational total() const { return value_interval(Rational(0), Rational(1)); }

    // Minimal y with value(p ∩ [left_end(p), y]) = r. Requires non-empty p,
    // 0 <= r <= value(p). On zero-density plateaus the earliest point wins.
    Rational cut_prefix_min(const Piece& p, const Rational& r) const {
        if (p.empty()) throw QueryPrecondition("cut on empty piece");
        if (r < 0) throw QueryPrecondition("negative cut target");
        Rational acc(0);
        Rational reach = p.left_end();
        for (const auto& cell : cells(p)) {
            const auto& [a, b, d] = cell;
            Rational cv = d * (b - a);
            if (cv == 0) continue;
            if (acc + cv >= r) {
                if (acc == r) return reach;
                return a + (r - acc) / d;
            }
            acc += cv;
            reach = b;
        }
        if (acc == r) return reach;
        throw QueryPrecondition("cut target exceeds piece value");
    }

    // Maximal y with value(p ∩ [y, 1]) = r. Requires 0 <= r <= value(p).
    // r = 0 yields y = 1.
    Rational cut_suffix_max(const Piece& p, const Rational& r) const {
        if (r < 0) throw QueryPrecondition("negative cut target");
        if (r == 0) return Rational(1);
        if (p.empty()) throw QueryPrecondition("cut target exceeds piece value");
        Rational acc(0);
        Rational reach(1);
        auto cs = cells(p);
        for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
            const auto& [a, b, d] = *it;
            Rational cv = d * (b - a);
            if (cv == 0) continue;
            if (acc + cv >= r) {
                if (acc == r) return reach;
                return b - (r - acc) / d;
            }
            acc += cv;
            reach = a;
        }
        if (acc == r) return reach;
        throw QueryPrecondition("cut target exceeds piece value");
    }

  private:
    // Refinement of p's intervals by the density breakpoints: (lo, hi, density).
    std::vector<std::tuple<Rational, Rational, Rational>> cells(const Piece& p) const {
        std::vector<std::tuple<Rational, Rational, Rational>> out;
        for (const auto& iv : p.intervals()) {
            for (const auto& s : segs_) {
                if (s.hi <= iv.lo) continue;
                if (s.lo >= iv.hi) break;
                out.emplace_back(std::max(s.lo, iv.lo), std::min(s.hi, iv.hi), s.density);
            }
        }
        return out;
    }

    std::vector<DensitySegment> segs_;
};

}  // namespace cakecut
