#include "eds/generator.hpp"

#include <algorithm>
#include <utility>

#include "eds/errors.hpp"
#include "eds/recognition.hpp"
#include "eds/rng.hpp"

namespace eds {

namespace {

Side flip(Side s) { return s == Side::X ? Side::Y : Side::X; }

BipartiteGraph rejection_sample(const GenSpec& spec, SplitMix64& rng) {
    for (int attempt = 0; attempt < spec.max_retries; ++attempt) {
        std::vector<Side> sides(static_cast<std::size_t>(spec.n));
        for (auto& s : sides) s = (rng.next() & 1) ? Side::Y : Side::X;
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < spec.n; ++u)
            for (int v = u + 1; v < spec.n; ++v)
                if (sides[static_cast<std::size_t>(u)] != sides[static_cast<std::size_t>(v)] &&
                    rng.chance(spec.edge_prob))
                    edges.emplace_back(u, v);
        BipartiteGraph g = BipartiteGraph::build(static_cast<std::size_t>(spec.n), sides, edges);
        if (classify(g).in_class()) return g;
    }
    throw EdsError(Errc::RetriesExhausted,
                   "rejection sampling found no in-class graph in " +
                       std::to_string(spec.max_retries) + " tries");
}

GenResult planted_sample(const GenSpec& spec, SplitMix64& rng) {
    const int n = spec.n;
    int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::max(1, n / 3))));
    if (k > n) k = n;
    std::vector<Side> sides(static_cast<std::size_t>(n), Side::X);
    std::vector<int> center_of(static_cast<std::size_t>(n), -1);
    for (int c = 0; c < k; ++c) {
        sides[static_cast<std::size_t>(c)] = (rng.next() & 1) ? Side::Y : Side::X;
        center_of[static_cast<std::size_t>(c)] = c;
    }
    std::vector<std::pair<int, int>> edges;
    for (int v = k; v < n; ++v) {
        int c = static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
        center_of[static_cast<std::size_t>(v)] = c;
        sides[static_cast<std::size_t>(v)] = flip(sides[static_cast<std::size_t>(c)]);
        edges.emplace_back(std::min(v, c), std::max(v, c));
    }
    BipartiteGraph g = BipartiteGraph::build(static_cast<std::size_t>(n), sides, edges);

    // Leaf-leaf cross edges keep the planted set an e.d.s. unconditionally
    // (no leaf ever touches a second center), so only the class is rechecked,
    // and only around the new edge.
    int attempts = n;
    for (int t = 0; t < attempts; ++t) {
        int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (u == v || u < k || v < k) continue;
        if (sides[static_cast<std::size_t>(u)] == sides[static_cast<std::size_t>(v)]) continue;
        if (g.adjacent(u, v)) continue;
        std::vector<std::pair<int, int>> es = g.edges();
        es.emplace_back(std::min(u, v), std::max(u, v));
        std::sort(es.begin(), es.end());
        BipartiteGraph cand = BipartiteGraph::build(static_cast<std::size_t>(n), sides, es);
        if (has_induced_even_hole_through_edge(cand, 6, u, v)) continue;
        if (has_induced_spider_through_edge(cand, 1, 2, 5, u, v)) continue;
        if (has_induced_spider_through_edge(cand, 3, 3, 3, u, v)) continue;
        g = std::move(cand);
    }
    GenResult res;
    res.planted = VertexSet(static_cast<std::size_t>(n));
    for (int c = 0; c < k; ++c) res.planted.insert(c);
    res.graph = std::move(g);
    return res;
}

std::vector<Side> alternating(int n) {
    std::vector<Side> s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = (i % 2) ? Side::Y : Side::X;
    return s;
}

} // namespace

BipartiteGraph path_graph(int k) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < k; ++i) es.emplace_back(i, i + 1);
    return BipartiteGraph::build(static_cast<std::size_t>(k), alternating(k), es);
}

BipartiteGraph cycle_graph(int k) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < k; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(0, k - 1);
    return BipartiteGraph::build(static_cast<std::size_t>(k), alternating(k), es);
}

BipartiteGraph star_graph(int leaves) {
    std::vector<Side> sides(static_cast<std::size_t>(leaves) + 1, Side::Y);
    sides[0] = Side::X;
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return BipartiteGraph::build(sides.size(), sides, es);
}

BipartiteGraph spider_graph(int i, int j, int k) {
    int n = 1 + i + j + k;
    std::vector<Side> sides(static_cast<std::size_t>(n), Side::X);
    std::vector<std::pair<int, int>> es;
    int pos = 1;
    for (int len : {i, j, k}) {
        int prev = 0, depth = 0;
        for (int t = 0; t < len; ++t) {
            es.emplace_back(std::min(prev, pos), std::max(prev, pos));
            sides[static_cast<std::size_t>(pos)] = (depth % 2) ? Side::X : Side::Y;
            prev = pos;
            ++pos;
            ++depth;
        }
    }
    std::sort(es.begin(), es.end());
    return BipartiteGraph::build(static_cast<std::size_t>(n), sides, es);
}

GenResult gen_in_class(const GenSpec& spec) {
    if (spec.n < 1) throw EdsError(Errc::BadVertex, "gen: n must be at least 1");
    if (spec.edge_prob < 0.0 || spec.edge_prob > 1.0)
        throw EdsError(Errc::BadVertex, "gen: edge_prob must lie in [0,1]");
    SplitMix64 rng(spec.seed);
    if (spec.mode == GenMode::Rejection) {
        GenResult res;
        res.graph = rejection_sample(spec, rng);
        res.planted = VertexSet(static_cast<std::size_t>(spec.n));
        return res;
    }
    return planted_sample(spec, rng);
}

std::vector<NamedInstance> corpus() {
    std::vector<NamedInstance> out;
    for (int k = 1; k <= 12; ++k)
        out.push_back({"p" + std::to_string(k), path_graph(k), true});
    out.push_back({"c4", cycle_graph(4), true});
    out.push_back({"c6", cycle_graph(6), false});
    out.push_back({"star3", star_graph(3), true});
    out.push_back({"star5", star_graph(5), true});

    // Double star: adjacent centers 0-1 with two and three leaves.
    {
        std::vector<Side> sides = {Side::X, Side::Y, Side::Y, Side::Y, Side::X, Side::X, Side::X};
        std::vector<std::pair<int, int>> es = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {1, 6}};
        out.push_back(
            {"dstar23", BipartiteGraph::build(sides.size(), sides, es), true});
    }

    out.push_back({"s125", spider_graph(1, 2, 5), false});
    out.push_back({"s333", spider_graph(3, 3, 3), false});

    // P7 with a pendant on the midpoint: the smallest instance whose solution
    // contains a P5 midpoint with an extra neighbor.
    {
        std::vector<Side> sides = alternating(8);
        sides[7] = Side::X; // pendant of the midpoint (vertex 3, side Y)
        std::vector<std::pair<int, int>> es = {{0, 1}, {1, 2}, {2, 3}, {3, 4},
                                               {4, 5}, {5, 6}, {3, 7}};
        out.push_back({"p7_pendant", BipartiteGraph::build(sides.size(), sides, es), true});
    }

    // Disjoint unions.
    {
        std::vector<Side> sides = {Side::X, Side::Y, Side::X, Side::X, Side::Y, Side::X};
        std::vector<std::pair<int, int>> es = {{0, 1}, {1, 2}, {3, 4}, {4, 5}};
        out.push_back({"2p3", BipartiteGraph::build(sides.size(), sides, es), true});
    }
    {
        std::vector<Side> sides = alternating(8);
        std::vector<std::pair<int, int>> es = {{0, 1}, {1, 2}, {2, 3},
                                               {4, 5}, {5, 6}, {6, 7}, {4, 7}};
        out.push_back({"p4_c4", BipartiteGraph::build(sides.size(), sides, es), true});
    }
    {
        std::vector<Side> sides(static_cast<std::size_t>(3), Side::X);
        out.push_back({"edgeless3", BipartiteGraph::build(3, sides, {}), true});
    }
    return out;
}

} // namespace eds
