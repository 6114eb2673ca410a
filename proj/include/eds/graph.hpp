#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "eds/vertex_set.hpp"

namespace eds {

enum class Side : std::uint8_t { X, Y };

inline char side_char(Side s) { return s == Side::X ? 'X' : 'Y'; }

constexpr int kUnreachable = -1;

// Immutable bipartite graph. Vertices are dense ids 0..n-1, every edge joins
// an X-vertex to a Y-vertex, adjacency lists are sorted. Safe to share across
// threads once built; all queries are const.
class BipartiteGraph {
public:
    BipartiteGraph() = default; // the empty graph

    // Validates the invariants; throws EdsError on SelfLoop, IntraSideEdge,
    // DuplicateEdge or BadVertex.
    static BipartiteGraph build(std::size_t n, std::vector<Side> sides,
                                const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }

    Side side(int v) const { return sides_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    bool adjacent(int u, int v) const {
        return u != v && rows_[static_cast<std::size_t>(u)].contains(v);
    }

    const VertexSet& neighbor_set(int v) const { return rows_[static_cast<std::size_t>(v)]; }

    VertexSet closed_neighborhood(int v) const;   // N[v]
    VertexSet open_neighborhood(int v) const;     // N(v)
    VertexSet second_neighborhood(int v) const;   // N^2(v): distance exactly 2

    // BFS distance; kUnreachable when u and v lie in different components.
    int distance(int u, int v) const;

    std::vector<VertexSet> components() const;

    VertexSet vertices() const;
    VertexSet vertices_on(Side s) const;

    // A joins B: every A-B pair is adjacent. A cojoins B: no A-B edges.
    bool joins(const VertexSet& a, const VertexSet& b) const;
    bool cojoins(const VertexSet& a, const VertexSet& b) const;

    struct Induced;
    Induced induced_subgraph(const VertexSet& keep) const;

    // Canonical edge list: u < v, ascending lexicographic.
    std::vector<std::pair<int, int>> edges() const;

private:

    int n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<Side> sides_;
    std::vector<std::vector<int>> adj_;
    std::vector<VertexSet> rows_; // adjacency rows as bitsets
};

struct BipartiteGraph::Induced {
    BipartiteGraph graph;
    std::vector<int> to_parent;   // child id -> parent id
    std::vector<int> from_parent; // parent id -> child id or -1
};

// BFS layering from a seed set. levels[0] equals the seed; vertices not
// reached from the seed are reported in `unreachable` rather than given a
// sentinel level.
struct DistanceLevels {
    std::vector<VertexSet> levels;
    std::vector<int> level_of; // kUnreachable when not reached
    VertexSet unreachable;

    int level(int v) const { return level_of[static_cast<std::size_t>(v)]; }
    int depth() const { return static_cast<int>(levels.size()) - 1; }

    // N_i as a set; empty set when i exceeds the depth.
    VertexSet at(std::size_t i, std::size_t universe) const {
        if (i < levels.size()) return levels[i];
        return VertexSet(universe);
    }
};

// Throws EdsError(EmptySeed) when seed is empty.
DistanceLevels distance_levels(const BipartiteGraph& g, const VertexSet& seed);

} // namespace eds
