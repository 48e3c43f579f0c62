#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cakecut/errors.hpp"
#include "cakecut/rational.hpp"

namespace cakecut {

struct Interval {
    Rational lo;
    Rational hi;

    bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
};

// A piece of cake: a finite union of closed intervals in canonical form
// (sorted, non-degenerate, separated by gaps of positive length; touching
// intervals merged). Canonical form makes equality of point sets decidable
// by plain vector comparison, which every exact check in the engine relies
// on. Intervals are closed and share endpoints freely; set subtraction
// removes open interiors only.
class Piece {
  public:
    Piece() = default;

    static Piece normalized(std::vector<Interval> intervals, bool require_unit_range = false) {
        if (require_unit_range) {
            for (const auto& iv : intervals) {
                if (iv.lo < 0 || iv.hi > 1 || iv.lo > iv.hi)
                    throw DomainError("interval endpoints outside [0,1] or reversed");
            }
        }
        std::sort(intervals.begin(), intervals.end(),
                  [](const Interval& a, const Interval& b) {
                      return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
                  });
        Piece out;
        for (const auto& iv : intervals) {
            if (iv.lo >= iv.hi) continue;  // degenerate: v([a,a]) = 0
            if (!out.ivs_.empty() && iv.lo <= out.ivs_.back().hi) {
                if (iv.hi > out.ivs_.back().hi) out.ivs_.back().hi = iv.hi;
            } else {
                out.ivs_.push_back(iv);
            }
        }
        return out;
    }

    static Piece interval(const Rational& lo, const Rational& hi) {
        return normalized({Interval{lo, hi}});
    }

    static Piece unit() { return interval(Rational(0), Rational(1)); }

    const std::vector<Interval>& intervals() const { return ivs_; }
    bool empty() const { return ivs_.empty(); }
    std::size_t size() const { return ivs_.size(); }

    Rational measure() const {
        Rational total(0);
        for (const auto& iv : ivs_) total += iv.hi - iv.lo;
        return total;
    }

    // Leftmost point of the piece; only valid when non-empty.
    const Rational& left_end() const {
        if (ivs_.empty()) throw StateError("left_end of empty piece");
        return ivs_.front().lo;
    }

    bool operator==(const Piece& o) const { return ivs_ == o.ivs_; }
    bool operator!=(const Piece& o) const { return !(*this == o); }

  private:
    std::vector<Interval> ivs_;
};

inline Piece piece_union(const Piece& a, const Piece& b) {
    std::vector<Interval> all = a.intervals();
    all.insert(all.end(), b.intervals().begin(), b.intervals().end());
    return Piece::normalized(std::move(all));
}

// a minus the open interior of b; shared endpoints survive as boundaries,
// zero-length remnants are dropped by normalization.
inline Piece piece_subtract(const Piece& a, const Piece& b) {
    std::vector<Interval> out;
    for (const auto& iv : a.intervals()) {
        Rational cursor = iv.lo;
        for (const auto& cut : b.intervals()) {
            if (cut.hi <= cursor) continue;
            if (cut.lo >= iv.hi) break;
            if (cut.lo > cursor) out.push_back(Interval{cursor, std::min(cut.lo, iv.hi)});
            cursor = std::max(cursor, std::min(cut.hi, iv.hi));
            if (cursor >= iv.hi) break;
        }
        if (cursor < iv.hi) out.push_back(Interval{cursor, iv.hi});
    }
    return Piece::normalized(std::move(out));
}

inline Piece piece_intersect(const Piece& a, const Piece& b) {
    std::vector<Interval> out;
    auto ia = a.intervals().begin();
    auto ib = b.intervals().begin();
    while (ia != a.intervals().end() && ib != b.intervals().end()) {
        Rational lo = std::max(ia->lo, ib->lo);
        Rational hi = std::min(ia->hi, ib->hi);
        if (lo < hi) out.push_back(Interval{lo, hi});
        if (ia->hi < ib->hi)
            ++ia;
        else
            ++ib;
    }
    return Piece::normalized(std::move(out));
}

// p ∩ [lo, hi]
inline Piece piece_clip(const Piece& p, const Rational& lo, const Rational& hi) {
    if (lo >= hi) return Piece{};
    return piece_intersect(p, Piece::interval(lo, hi));
}

inline bool interiors_disjoint(const Piece& a, const Piece& b) {
    return piece_intersect(a, b).empty();
}

inline std::string piece_str(const Piece& p) {
    std::string s = "[";
    bool first = true;
    for (const auto& iv : p.intervals()) {
        if (!first) s += ",";
        first = false;
        s += "[" + rat_str(iv.lo) + "," + rat_str(iv.hi) + "]";
    }
    return s + "]";
}

}  // namespace cakecut
