#include "eds/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "eds/errors.hpp"

namespace eds {

BipartiteGraph BipartiteGraph::build(std::size_t n, std::vector<Side> sides,
                                     const std::vector<std::pair<int, int>>& edges) {
    if (sides.size() != n)
        throw EdsError(Errc::BadVertex, "side list length does not match vertex count");
    BipartiteGraph g;
    g.n_ = static_cast<int>(n);
    g.sides_ = std::move(sides);
    g.adj_.assign(n, {});
    g.rows_.assign(n, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= g.n_ || v >= g.n_)
            throw EdsError(Errc::BadVertex,
                           "edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            throw EdsError(Errc::SelfLoop, "self-loop at vertex " + std::to_string(u));
        if (g.sides_[static_cast<std::size_t>(u)] == g.sides_[static_cast<std::size_t>(v)])
            throw EdsError(Errc::IntraSideEdge,
                           "edge inside one color class: " + std::to_string(u) + " " + std::to_string(v));
        if (g.rows_[static_cast<std::size_t>(u)].contains(v))
            throw EdsError(Errc::DuplicateEdge,
                           "duplicate edge: " + std::to_string(u) + " " + std::to_string(v));
        g.rows_[static_cast<std::size_t>(u)].insert(v);
        g.rows_[static_cast<std::size_t>(v)].insert(u);
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
        ++g.edge_count_;
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    return g;
}

VertexSet BipartiteGraph::closed_neighborhood(int v) const {
    VertexSet s = rows_[static_cast<std::size_t>(v)];
    s.insert(v);
    return s;
}

VertexSet BipartiteGraph::open_neighborhood(int v) const { return rows_[static_cast<std::size_t>(v)]; }

VertexSet BipartiteGraph::second_neighborhood(int v) const {
    VertexSet s(static_cast<std::size_t>(n_));
    for (int w : neighbors(v)) s |= rows_[static_cast<std::size_t>(w)];
    s -= closed_neighborhood(v);
    return s;
}

int BipartiteGraph::distance(int u, int v) const {
    if (u == v) return 0;
    std::vector<int> dist(static_cast<std::size_t>(n_), kUnreachable);
    std::queue<int> q;
    dist[static_cast<std::size_t>(u)] = 0;
    q.push(u);
    while (!q.empty()) {
        int a = q.front();
        q.pop();
        for (int b : neighbors(a)) {
            if (dist[static_cast<std::size_t>(b)] != kUnreachable) continue;
            dist[static_cast<std::size_t>(b)] = dist[static_cast<std::size_t>(a)] + 1;
            if (b == v) return dist[static_cast<std::size_t>(b)];
            q.push(b);
        }
    }
    return kUnreachable;
}

std::vector<VertexSet> BipartiteGraph::components() const {
    std::vector<VertexSet> out;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    for (int s = 0; s < n_; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        VertexSet comp(static_cast<std::size_t>(n_));
        std::queue<int> q;
        q.push(s);
        seen[static_cast<std::size_t>(s)] = 1;
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            comp.insert(a);
            for (int b : neighbors(a)) {
                if (!seen[static_cast<std::size_t>(b)]) {
                    seen[static_cast<std::size_t>(b)] = 1;
                    q.push(b);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

VertexSet BipartiteGraph::vertices() const {
    VertexSet s(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) s.insert(v);
    return s;
}

VertexSet BipartiteGraph::vertices_on(Side sd) const {
    VertexSet s(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v)
        if (side(v) == sd) s.insert(v);
    return s;
}

bool BipartiteGraph::joins(const VertexSet& a, const VertexSet& b) const {
    bool ok = true;
    a.for_each([&](int u) {
        if (!ok) return;
        b.for_each([&](int v) {
            if (u != v && !adjacent(u, v)) ok = false;
        });
    });
    return ok;
}

bool BipartiteGraph::cojoins(const VertexSet& a, const VertexSet& b) const {
    bool ok = true;
    a.for_each([&](int u) {
        if (!ok) return;
        if (rows_[static_cast<std::size_t>(u)].intersects(b)) ok = false;
    });
    return ok;
}

BipartiteGraph::Induced BipartiteGraph::induced_subgraph(const VertexSet& keep) const {
    Induced out;
    out.from_parent.assign(static_cast<std::size_t>(n_), -1);
    keep.for_each([&](int v) {
        out.from_parent[static_cast<std::size_t>(v)] = static_cast<int>(out.to_parent.size());
        out.to_parent.push_back(v);
    });
    std::vector<Side> sides;
    sides.reserve(out.to_parent.size());
    for (int v : out.to_parent) sides.push_back(side(v));
    std::vector<std::pair<int, int>> es;
    for (int v : out.to_parent) {
        for (int w : neighbors(v)) {
            if (v < w && keep.contains(w))
                es.emplace_back(out.from_parent[static_cast<std::size_t>(v)],
                                out.from_parent[static_cast<std::size_t>(w)]);
        }
    }
    out.graph = build(out.to_parent.size(), std::move(sides), es);
    return out;
}

std::vector<std::pair<int, int>> BipartiteGraph::edges() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) es.emplace_back(u, v);
    return es;
}

DistanceLevels distance_levels(const BipartiteGraph& g, const VertexSet& seed) {
    if (seed.empty()) throw EdsError(Errc::EmptySeed, "distance_levels: empty seed");
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    DistanceLevels dl;
    dl.level_of.assign(n, kUnreachable);
    dl.unreachable = VertexSet(n);
    std::vector<int> frontier = seed.to_vector();
    for (int v : frontier) dl.level_of[static_cast<std::size_t>(v)] = 0;
    int level = 0;
    while (!frontier.empty()) {
        VertexSet cur(n);
        for (int v : frontier) cur.insert(v);
        dl.levels.push_back(std::move(cur));
        std::vector<int> next;
        for (int v : frontier) {
            for (int w : g.neighbors(v)) {
                if (dl.level_of[static_cast<std::size_t>(w)] == kUnreachable) {
                    dl.level_of[static_cast<std::size_t>(w)] = level + 1;
                    next.push_back(w);
                }
            }
        }
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
        ++level;
    }
    for (std::size_t v = 0; v < n; ++v)
        if (dl.level_of[v] == kUnreachable) dl.unreachable.insert(static_cast<int>(v));
    return dl;
}

} // namespace eds
