#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eds/graph.hpp"

namespace eds {

enum class PatternKind { Path, Cycle, Spider };

// An induced-subgraph embedding certificate. For paths the embedding lists
// the path in order; for cycles, the cycle in order; for spiders, the center
// first and then the legs in canonical (i <= j <= k) order, each center-out.
struct SubgraphWitness {
    PatternKind kind = PatternKind::Path;
    int path_len = 0;
    int cycle_len = 0;
    std::array<int, 3> legs{0, 0, 0};
    std::vector<int> embedding;

    std::string to_line() const;
};

// Re-checks that a witness really is an induced embedding of its pattern.
bool witness_valid(const BipartiteGraph& g, const SubgraphWitness& w);

// Enumerates induced paths on k vertices, each once (endpoints ordered so
// that path.front() < path.back()); deterministic ascending order. The
// callback returns false to stop early.
void for_each_induced_path(const BipartiteGraph& g, int k,
                           const std::function<bool(const std::vector<int>&)>& fn);

std::optional<SubgraphWitness> find_induced_path(const BipartiteGraph& g, int k);

// Induced cycle of length >= min_len (min_len even, >= 6). With min_len == 6
// a null result certifies chordal bipartite.
std::optional<SubgraphWitness> find_induced_even_hole(const BipartiteGraph& g, int min_len);

// Induced spider S_{i,j,k}; legs are canonicalized to i <= j <= k.
std::optional<SubgraphWitness> find_induced_spider(const BipartiteGraph& g, int i, int j, int k);

// Variants restricted to embeddings that use both endpoints of one edge;
// used for incremental class checks while generating instances.
bool has_induced_even_hole_through_edge(const BipartiteGraph& g, int min_len, int eu, int ev);
bool has_induced_spider_through_edge(const BipartiteGraph& g, int i, int j, int k, int eu, int ev);

struct ClassReport {
    bool is_bipartite = true; // guaranteed by the BipartiteGraph invariants
    bool is_chordal_bipartite = false;
    bool s125_free = false;
    bool s333_free = false;
    std::optional<SubgraphWitness> hole_witness;
    std::optional<SubgraphWitness> s125_witness;
    std::optional<SubgraphWitness> s333_witness;

    bool in_class() const { return is_bipartite && is_chordal_bipartite && s125_free && s333_free; }
};

// Spider parameters are options so related classes can be probed; defaults
// follow the (S_{1,2,5}, S_{3,3,3}) target class.
struct ClassifyOptions {
    std::array<int, 3> spider_a{1, 2, 5};
    std::array<int, 3> spider_b{3, 3, 3};
};

ClassReport classify(const BipartiteGraph& g, const ClassifyOptions& opt = {});

// All vertices that are the midpoint of some induced P5.
VertexSet p5_midpoints(const BipartiteGraph& g);

} // namespace eds
