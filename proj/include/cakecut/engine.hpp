#pragma once

#include <functional>
#include <vector>

#include "cakecut/allocation.hpp"
#include "cakecut/constants.hpp"
#include "cakecut/oracle.hpp"
#include "cakecut/trace.hpp"

namespace cakecut {

struct EngineOptions {
    // Runs the O(n^2 |A| n)-eval invariant checkers and conservation audits.
    bool check_invariants = false;
    // Under override constants, skip the B domination core-runs for agents
    // whose residue value is already zero.
    bool fast_degenerate = false;
};

struct MainCallRecord {
    int depth;
    int n_agents;
    long cuts_before;
    long cuts_after;
};

struct RunStats {
    long recursive_main_calls = 0;
    int max_depth = 0;
    std::vector<MainCallRecord> calls;
    // PrepareGoLeft instrumentation of the top-level call (cut queries made
    // outside recursive Main invocations).
    long prepare_cuts_outside_recursion = 0;
    long polarize_firings = 0;
    long restarts = 0;
    std::vector<long> semi_invariant_trace;
};

// Shared mutable context threaded through the protocol stack. `run_main` is
// the recursion hook installed by main_protocol so PrepareGoLeft / GoLeft can
// recurse without a header cycle.
struct Engine {
    Oracle& oracle;
    EngineOptions opts;
    std::function<Constants(int)> consts_factory;
    TraceSink trace;
    RunStats stats;
    int depth = 0;
    std::function<PartialAllocation(const Piece&, const std::vector<int>&)> run_main;

    Engine(Oracle& o, EngineOptions options, std::function<Constants(int)> factory,
           TraceSink sink = TraceSink())
        : oracle(o), opts(options), consts_factory(std::move(factory)), trace(std::move(sink)) {}

    long cuts() const { return oracle.ledger().cut_count; }
};

}  // namespace cakecut
