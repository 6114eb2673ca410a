#pragma once

#include <string>
#include <vector>

#include "eds/graph.hpp"
#include "eds/oracle.hpp"

namespace eds {

// One entry per lemma id. hypothesis_met=false entries hold vacuously; a
// violation (hypothesis met, conclusion failed) always carries a witness.
struct LemmaEntry {
    std::string id;
    bool hypothesis_met = false;
    bool conclusion_holds = true;
    std::string witness;

    bool violated() const { return hypothesis_met && !conclusion_holds; }
};

struct LemmaReport {
    std::vector<LemmaEntry> entries;

    int violations() const;
    const LemmaEntry* find(const std::string& id) const;
    std::string to_text() const;
};

// Stable ids, in report order.
extern const std::vector<std::string> kLemmaIds;

// Validates every structural lemma against a concrete e.d.s. `d` with
// committed basis `d_basis` (subset of d). Checks run per connected
// component, mirroring the standing connectivity assumption. Throws
// EdsError(NotAnEds) when d fails verify_eds and BadVertex when d_basis is
// not contained in d. A few hypotheses are closed under oracle forcing, so
// the instance must be oracle-feasible in size.
LemmaReport check_lemmas(const BipartiteGraph& g, const VertexSet& d, const VertexSet& d_basis,
                         const OracleOptions& oracle_opt = {});

// Branch pruner used by the structured solver on partial states: evaluates
// the level lemmas whose hypotheses and conclusions are fully determined by
// (graph, basis). Returns the id of the first failed one, or "" when none
// fail. `g` must be connected.
std::string first_failed_pruner(const BipartiteGraph& g, const VertexSet& basis);

} // namespace eds
