#pragma once

#include <cstdint>

#include "eds/graph.hpp"
#include "eds/oracle.hpp"
#include "eds/recognition.hpp"
#include "eds/state.hpp"

namespace eds {

// How the winning resolution bottomed out: Direct — propagation alone decided
// the component; NoP8Residual — branching/reduction was needed and the
// residuals were decided by propagation; OracleFallback — a P8-free residual
// (or the component itself) was delegated to the exact-cover engine.
enum class BaseCase { Direct = 0, NoP8Residual = 1, OracleFallback = 2 };

struct SolveOptions {
    bool force = false; // skip the class gate
    std::uint64_t branch_budget = 100'000;
    OracleOptions oracle;          // node budget for P8-free delegation
    ClassifyOptions classify_opts; // spider parameters of the class gate
    bool use_pruners = true;       // lemma-backed branch pruning
};

struct SolveOutcome {
    bool found = false;
    VertexSet eds;
    ReductionTrace trace;
    BaseCase base_case = BaseCase::Direct;
    // Marks of the final resolution: members of the e.d.s. are InD, every
    // other vertex Excluded; meaningless for NoEDS outcomes.
    std::vector<VertexStatus> final_status;
};

// Branch-and-reduce driver over the propagation rules, with the exact-cover
// oracle as the P8-free base case. Throws EdsError(NotInClass) when the input
// fails the class gate (unless opts.force) and BudgetError when the branch
// budget is exhausted. Every EDS outcome is certified by verify_eds before
// being returned.
SolveOutcome solve(const BipartiteGraph& g, const SolveOptions& opts = {});

} // namespace eds
