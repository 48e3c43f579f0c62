#pragma once

#include <map>
#include <string>
#include <vector>

#include "cakecut/allocation.hpp"
#include "cakecut/constants.hpp"
#include "cakecut/errors.hpp"
#include "cakecut/oracle.hpp"
#include "cakecut/piece.hpp"

namespace cakecut {

enum class SignificanceClass { Insignificant, Intermediate, VerySignificant };

// Thresholds are relative to the agent's value of the (effective) residue:
// insignificant  x <= v / (n^2 C'),  very significant  x >= v / C',
// significant    x >= v / (n C').  All comparisons non-strict, exactly as
// defined; v = 0 degenerates to {0 -> insignificant, >0 -> very significant}.
inline SignificanceClass classify(const Rational& x, const Rational& residue_value,
                                  const Constants& k) {
    if (x < 0) throw DomainError("classify needs x >= 0");
    if (residue_value == 0)
        return x == 0 ? SignificanceClass::Insignificant : SignificanceClass::VerySignificant;
    Rational n2cp = Rational(BigInt(k.n) * k.n * k.Cp);
    if (x * n2cp <= residue_value) return SignificanceClass::Insignificant;
    if (x * Rational(k.Cp) >= residue_value) return SignificanceClass::VerySignificant;
    return SignificanceClass::Intermediate;
}

inline bool is_significant(const Rational& x, const Rational& residue_value, const Constants& k) {
    if (x < 0) throw DomainError("is_significant needs x >= 0");
    if (residue_value == 0) return true;  // 0 >= 0/(nC')
    return x * Rational(BigInt(k.n) * k.Cp) >= residue_value;
}

inline Rational bonus(const Oracle& o, const PartialAllocation& s, int i, int j) {
    return o.value(i, s.share(i)) - o.value(i, s.share(j));
}

inline bool dominates(const Oracle& o, const PartialAllocation& s, const Piece& residue, int i,
                      int j) {
    return o.value(i, s.share(i)) >= o.value(i, s.share(j)) + o.value(i, residue);
}

struct ExtractionEntry {
    Piece piece;    // e_{jkl}; may be empty when the bonus was zero
    int extractor;  // i_{jkl}
};

// One Core run's frozen record: the pieces c_{jk}, later augmented with the
// associated pieces e_{jkl} and extractor identities (numbered right to left).
struct Snapshot {
    int id = 0;
    int cutter = 0;
    std::map<int, Piece> c;
    std::map<int, std::vector<ExtractionEntry>> extractions;
    bool extraction_done = false;

    int m_of(int k) const {
        auto it = extractions.find(k);
        return it == extractions.end() ? 0 : static_cast<int>(it->second.size());
    }
};

// Canonical isomorphism key: for every k in id order, the ordered extractor
// list. Equal keys <=> equal m_{jk} and equal i_{jkl} for all k, l.
inline std::string iso_key(const Snapshot& s) {
    if (!s.extraction_done) throw StateError("iso_key before extraction");
    std::string key;
    for (const auto& [k, piece] : s.c) {
        (void)piece;
        key += std::to_string(k) + ":";
        auto it = s.extractions.find(k);
        if (it != s.extractions.end())
            for (const auto& e : it->second) key += std::to_string(e.extractor) + ",";
        key += ";";
    }
    return key;
}

// Number of triples (j, i, k), i != k, whose bonus in snapshot j is very
// significant relative to the per-agent effective residue values.
inline long semi_invariant(const std::vector<Snapshot>& snapshots, const Oracle& o,
                           const std::map<int, Rational>& residue_value, const Constants& k) {
    long count = 0;
    for (const auto& snap : snapshots) {
        for (const auto& [i, ci] : snap.c) {
            Rational vi_own = o.value(i, ci);
            for (const auto& [kk, ck] : snap.c) {
                if (kk == i) continue;
                Rational b = vi_own - o.value(i, ck);
                if (b < 0) b = 0;  // envy-free snapshots keep this at >= 0
                if (classify(b, residue_value.at(i), k) == SignificanceClass::VerySignificant)
                    ++count;
            }
        }
    }
    return count;
}

}  // namespace cakecut
