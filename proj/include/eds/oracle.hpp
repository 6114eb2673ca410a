#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eds/graph.hpp"

namespace eds {

struct EdsSolution {
    VertexSet d;
    bool certified = false;
};

struct EdsViolation {
    int vertex;
    int count; // |N[vertex] ∩ d|
};

// ok iff every vertex is dominated by exactly one member of d; otherwise the
// smallest violating vertex and its domination count.
std::optional<EdsViolation> verify_eds(const BipartiteGraph& g, const VertexSet& d);

enum class OracleMode { First, All, Count };

struct OracleOptions {
    std::uint64_t node_budget = 10'000'000;
};

struct OracleResult {
    std::vector<EdsSolution> solutions; // First: at most one; Count: empty
    std::uint64_t count = 0;            // number of e.d.s. found
    std::uint64_t nodes = 0;            // search nodes consumed

    bool has_eds() const { return count > 0; }
};

// Exact cover over the closed-neighborhood hypergraph: columns are vertices,
// row v is N[v], a cover is exactly an e.d.s. Column choice is
// fewest-candidates-first with smallest-id tie-break. Throws BudgetError when
// the node budget is exhausted.
OracleResult solve_exact(const BipartiteGraph& g, OracleMode mode, const OracleOptions& opt = {});

// Same search with `assumed` pre-selected into the cover and `excluded` rows
// removed; this is the engine behind forced_excluded_by_oracle and the
// P8-free fallback of the structured solver.
OracleResult solve_exact_constrained(const BipartiteGraph& g, OracleMode mode,
                                     const VertexSet& assumed, const VertexSet& excluded,
                                     const OracleOptions& opt = {});

struct ForcedExcluded {
    bool infeasible = false; // no e.d.s. contains `assumed`; sets are vacuous
    VertexSet forced;        // intersection of all e.d.s. containing `assumed`
    VertexSet excluded;      // complement of their union
    std::uint64_t eds_count = 0;
};

ForcedExcluded forced_excluded_by_oracle(const BipartiteGraph& g, const VertexSet& assumed,
                                         const OracleOptions& opt = {});

// Serialization: "eds <k> : <sorted ids>", "no-eds", "budget-exceeded <nodes>".
std::string format_solution(const VertexSet& d);
std::string format_no_eds();
std::string format_budget_exceeded(std::uint64_t nodes);

// Parses one "eds <k> : <ids>" line into a set over `universe` vertices.
VertexSet parse_solution_line(const std::string& line, std::size_t universe);

} // namespace eds
