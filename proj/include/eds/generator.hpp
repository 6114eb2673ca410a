#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eds/graph.hpp"

namespace eds {

enum class GenMode { Rejection, PlantedEds };

struct GenSpec {
    int n = 8;
    double edge_prob = 0.15;
    std::uint64_t seed = 1;
    GenMode mode = GenMode::PlantedEds;
    int max_retries = 200;
};

struct GenResult {
    BipartiteGraph graph;
    VertexSet planted; // planted mode: a set guaranteed to pass verify_eds
};

// Deterministic in-class instance generation (splitmix64 throughout).
// Rejection mode samples random bipartite graphs and filters by classify;
// planted mode grows a star forest (the closed neighborhoods of the planted
// set) and adds leaf-leaf cross edges only while the class survives. Throws
// EdsError(RetriesExhausted) when rejection sampling gives up.
GenResult gen_in_class(const GenSpec& spec);

struct NamedInstance {
    std::string name;
    BipartiteGraph graph;
    bool in_class;
};

// The fixed canonical family: paths, cycles, stars, double stars, the two
// forbidden spiders, a P7-with-pendant midpoint configuration, and disjoint
// unions. c6 is the out-of-class control.
std::vector<NamedInstance> corpus();

// Convenience builders shared with the tests.
BipartiteGraph path_graph(int k);
BipartiteGraph cycle_graph(int k); // k even
BipartiteGraph star_graph(int leaves);
BipartiteGraph spider_graph(int i, int j, int k);

} // namespace eds
