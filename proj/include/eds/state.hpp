#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eds/graph.hpp"
#include "eds/trace.hpp"

namespace eds {

enum class VertexStatus : std::uint8_t { Open, InD, Excluded };

// Partial-solution state for the branch-and-reduce search. Every InD vertex
// belongs to the committed basis; distance levels are recomputed from the
// basis after every assertion. Infeasibility is a flag, not an exception.
class DominationState {
public:
    explicit DominationState(const BipartiteGraph& g);

    const BipartiteGraph& graph() const { return *g_; }
    VertexStatus status(int v) const { return status_[static_cast<std::size_t>(v)]; }
    bool open(int v) const { return status(v) == VertexStatus::Open; }
    int dominated_by(int v) const { return dominated_[static_cast<std::size_t>(v)]; }
    const VertexSet& d_basis() const { return basis_; }
    bool feasible() const { return feasible_; }
    const std::string& infeasible_rule() const { return infeasible_rule_; }

    // Null when the basis is empty.
    const DistanceLevels* levels() const { return levels_ ? levels_.get() : nullptr; }

    ReductionTrace& trace() { return trace_; }
    const ReductionTrace& trace() const { return trace_; }
    void set_recording(bool on) { record_ = on; }

    // Branch seed: records a Seeded event and commits v.
    void seed(int v);

    // Rule-driven commitment; records Forced. Throws EdsError(ConflictExcluded)
    // when v is already Excluded (callers check first). Marks the state
    // infeasible with rule "DominationClash" if a vertex ends up dominated
    // twice or an InD distance constraint breaks.
    void assert_in_d(int v, const std::string& rule);

    void exclude(int v, const std::string& rule);
    void mark_infeasible(const std::string& rule);

    // feasible and every vertex dominated exactly once: d_basis is an e.d.s.
    bool fully_determined() const;

    std::vector<VertexStatus> status_snapshot() const { return status_; }

private:
    void commit(int v);

    const BipartiteGraph* g_;
    std::vector<VertexStatus> status_;
    std::vector<int> dominated_;
    VertexSet basis_;
    std::shared_ptr<const DistanceLevels> levels_;
    bool feasible_ = true;
    std::string infeasible_rule_;
    ReductionTrace trace_;
    bool record_ = true;
};

struct PropagateOptions {
    // Enables the P8 rule (positions 2 and 7 forced, the rest excluded). The
    // rule is only valid under the case assumption that no D-vertex is a P5
    // midpoint, so it stays off unless the caller owns that assumption; the
    // structured solver turns it on inside its certified branch.
    bool enable_p8 = false;
    // Failed-literal probing inside R-unit (assert a candidate, run the
    // basic rules, exclude it on contradiction).
    bool enable_probe = true;
    // Rule order override for the confluence test; empty = default order.
    std::vector<std::string> rule_order;
};

// Runs R-levels, R-deg, R-unit, R-p5mid and (optionally) R-p8 to fixpoint in
// a fixed deterministic order. Only meaningful on graphs from the target
// class; the lemma-based rules assume it.
DominationState propagate(DominationState state, const PropagateOptions& opt = {});

struct Reduction {
    BipartiteGraph child;
    std::vector<int> to_parent;
    std::vector<int> from_parent;
    VertexSet child_excluded; // carried exclusions, in child ids
};

// G' = G \ N[u] with N^2(u) pre-marked excluded in the child (u must be InD).
Reduction reduce_by_forced(const DominationState& state, int u);

// G minus the closed neighborhoods of all InD vertices; carries every
// surviving Excluded mark into the child.
Reduction reduce_by_forced(const DominationState& state);

} // namespace eds
