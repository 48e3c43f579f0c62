#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cakecut/errors.hpp"
#include "cakecut/piece.hpp"
#include "cakecut/rational.hpp"
#include "cakecut/valuation.hpp"

namespace cakecut {

enum class QueryKind { Cut, Eval };

struct QueryRecord {
    QueryKind kind;
    int agent;
    std::string args;
    std::string result;
    bool derived;  // Remark-1 bookkeeping eval rather than an explicit query
};

class QueryLedger {
  public:
    long cut_count = 0;
    long eval_count = 0;

    void log_cut(int agent, std::string args, std::string result) {
        ++cut_count;
        log_.push_back({QueryKind::Cut, agent, std::move(args), std::move(result), false});
    }
    void log_eval(int agent, std::string args, std::string result, bool derived) {
        ++eval_count;
        log_.push_back({QueryKind::Eval, agent, std::move(args), std::move(result), derived});
    }

    const std::vector<QueryRecord>& log() const { return log_; }

  private:
    std::vector<QueryRecord> log_;
};

// The Robertson–Webb interface. Protocol code is only allowed to reach the
// valuations through the query methods here; direct density access stays with
// the verifier. In full-information mode every cut query triggers the eval
// bookkeeping of all other agents on the cut piece, so afterwards
// eval_count == (n-1)*cut_count + n, and the protocol may consult value()
// for free when comparing known pieces.
class Oracle {
  public:
    explicit Oracle(std::map<int, Valuation> valuations, bool full_information = true)
        : vals_(std::move(valuations)), full_info_(full_information) {
        if (vals_.empty()) throw InputError("oracle needs at least one agent");
        for (const auto& [id, v] : vals_) agents_.push_back(id);
        if (full_info_) {
            for (int a : agents_)
                ledger_.log_eval(a, "[0,1]", rat_str(vals_.at(a).total()), true);
        }
    }

    const std::vector<int>& agents() const { return agents_; }
    int run_n() const { return static_cast<int>(agents_.size()); }
    bool full_information() const { return full_info_; }
    const QueryLedger& ledger() const { return ledger_; }

    // Explicit eval query; one ledger entry per interval evaluated.
    Rational eval(int agent, const Piece& p) {
        const Valuation& v = valuation(agent);
        Rational out(0);
        for (const auto& iv : p.intervals()) {
            Rational r = v.value_interval(iv.lo, iv.hi);
            ledger_.log_eval(agent, "[" + rat_str(iv.lo) + "," + rat_str(iv.hi) + "]", rat_str(r),
                             false);
            out += r;
        }
        return out;
    }

    // Minimal y with v_agent([x, y]) = r.
    Rational cut(int agent, const Rational& x, const Rational& r) {
        const Valuation& v = valuation(agent);
        if (r < 0) throw QueryPrecondition("cut with negative target");
        if (v.value_interval(x, Rational(1)) < r)
            throw QueryPrecondition("cut target exceeds v([x,1])");
        Rational y = (r == 0) ? x : v.cut_prefix_min(Piece::interval(x, Rational(1)), r);
        after_cut(agent, "x=" + rat_str(x) + " r=" + rat_str(r), y,
                  piece_clip(Piece::unit(), x, y));
        return y;
    }

    // Maximal mark with v_agent(R ∩ [mark, 1]) = r; returns (mark, R ∩ [mark, 1]).
    std::pair<Rational, Piece> cut_from_right(int agent, const Piece& R, const Rational& r) {
        const Valuation& v = valuation(agent);
        if (r < 0) throw QueryPrecondition("cut with negative target");
        if (v.value(R) < r) throw QueryPrecondition("cut target exceeds piece value");
        Rational mark = v.cut_suffix_max(R, r);
        Piece right = piece_clip(R, mark, Rational(1));
        after_cut(agent, "right-cut r=" + rat_str(r) + " of " + piece_summary(R), mark, right);
        return {mark, right};
    }

    // Partition of R into n pieces worth exactly v(R)/n each to the agent,
    // via n-1 left-to-right marks.
    std::vector<Piece> cut_equal(int agent, const Piece& R, int n) {
        const Valuation& v = valuation(agent);
        Rational total = v.value(R);
        if (total == 0) throw ZeroValueResidue("cut_equal on zero-value piece");
        std::vector<Piece> out;
        Rational prev = R.left_end();
        for (int t = 1; t < n; ++t) {
            Rational target = total * t / n;
            Rational y = v.cut_prefix_min(R, target);
            after_cut(agent, "equal-mark " + std::to_string(t) + "/" + std::to_string(n), y,
                      piece_clip(R, prev, y));
            out.push_back(piece_clip(R, prev, y));
            prev = y;
        }
        out.push_back(piece_clip(R, prev, Rational(1)));
        return out;
    }

    // Full-information lookup: not a Robertson–Webb query, never hits the
    // ledger. Protocol comparisons use this; Remark 1 justifies the accounting.
    Rational value(int agent, const Piece& p) const { return valuation(agent).value(p); }

    Rational value_pair(int agent, const Piece& a, const Piece& b) const {
        return valuation(agent).value(a) + valuation(agent).value(b);
    }

    const Valuation& valuation(int agent) const {
        auto it = vals_.find(agent);
        if (it == vals_.end())
            throw InputError("unknown agent id " + std::to_string(agent));
        return it->second;
    }

    const std::map<int, Valuation>& valuations() const { return vals_; }

    long remark1_eval_bound() const {
        return (run_n() - 1) * ledger_.cut_count + run_n();
    }

  private:
    void after_cut(int agent, const std::string& args, const Rational& result,
                   const Piece& cut_piece) {
        ledger_.log_cut(agent, args, rat_str(result));
        if (!full_info_) return;
        for (int other : agents_) {
            if (other == agent) continue;
            ledger_.log_eval(other, "piece of cut by " + std::to_string(agent),
                             rat_str(vals_.at(other).value(cut_piece)), true);
        }
    }

    static std::string piece_summary(const Piece& p) {
        if (p.size() <= 4) return piece_str(p);
        return "piece<" + std::to_string(p.size()) + " intervals>";
    }

    std::map<int, Valuation> vals_;
    std::vector<int> agents_;
    QueryLedger ledger_;
    bool full_info_;
};

}  // namespace cakecut
