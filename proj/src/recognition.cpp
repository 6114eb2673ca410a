#include "eds/recognition.hpp"

#include <algorithm>
#include <sstream>

namespace eds {

namespace {

// ---- small fixed patterns -------------------------------------------------

struct Pattern {
    int size = 0;
    std::vector<std::vector<char>> adj;

    void add_edge(int a, int b) { adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1; }
    bool edge(int a, int b) const { return adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0; }
};

Pattern make_pattern(int size) {
    Pattern p;
    p.size = size;
    p.adj.assign(static_cast<std::size_t>(size), std::vector<char>(static_cast<std::size_t>(size), 0));
    return p;
}

// Center 0; legs laid out consecutively, center-out.
Pattern spider_pattern(int i, int j, int k) {
    Pattern p = make_pattern(1 + i + j + k);
    int pos = 1;
    for (int len : {i, j, k}) {
        int prev = 0;
        for (int t = 0; t < len; ++t) {
            p.add_edge(prev, pos);
            prev = pos;
            ++pos;
        }
    }
    return p;
}

// Backtracking search for an induced embedding extending `map` (pattern id ->
// graph vertex or -1). `order` must list unmapped pattern vertices so each is
// pattern-adjacent to a previously known vertex.
bool extend_embedding(const BipartiteGraph& g, const Pattern& pat, std::vector<int>& map,
                      std::vector<char>& used, const std::vector<int>& order, std::size_t t) {
    if (t == order.size()) return true;
    int p = order[t];
    int parent = -1;
    for (int q = 0; q < pat.size; ++q) {
        if (map[static_cast<std::size_t>(q)] >= 0 && pat.edge(p, q)) {
            parent = q;
            break;
        }
    }
    // Patterns here are connected, so a parent always exists.
    for (int cand : g.neighbors(map[static_cast<std::size_t>(parent)])) {
        if (used[static_cast<std::size_t>(cand)]) continue;
        bool ok = true;
        for (int q = 0; q < pat.size && ok; ++q) {
            int gq = map[static_cast<std::size_t>(q)];
            if (gq < 0) continue;
            if (pat.edge(p, q) != (gq == cand ? true : g.adjacent(cand, gq))) ok = false;
            if (gq == cand) ok = false;
        }
        if (!ok) continue;
        map[static_cast<std::size_t>(p)] = cand;
        used[static_cast<std::size_t>(cand)] = 1;
        if (extend_embedding(g, pat, map, used, order, t + 1)) return true;
        used[static_cast<std::size_t>(cand)] = 0;
        map[static_cast<std::size_t>(p)] = -1;
    }
    return false;
}

// BFS order over the pattern from the already-mapped vertices.
std::vector<int> pattern_order(const Pattern& pat, const std::vector<int>& map) {
    std::vector<int> order;
    std::vector<char> seen(static_cast<std::size_t>(pat.size), 0);
    std::vector<int> queue;
    for (int p = 0; p < pat.size; ++p)
        if (map[static_cast<std::size_t>(p)] >= 0) {
            seen[static_cast<std::size_t>(p)] = 1;
            queue.push_back(p);
        }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int p = queue[static_cast<std::size_t>(head)];
        for (int q = 0; q < pat.size; ++q) {
            if (!seen[static_cast<std::size_t>(q)] && pat.edge(p, q)) {
                seen[static_cast<std::size_t>(q)] = 1;
                order.push_back(q);
                queue.push_back(q);
            }
        }
    }
    return order;
}

bool embed_pattern(const BipartiteGraph& g, const Pattern& pat, std::vector<int>& map) {
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int p = 0; p < pat.size; ++p)
        if (map[static_cast<std::size_t>(p)] >= 0) used[static_cast<std::size_t>(map[static_cast<std::size_t>(p)])] = 1;
    // Seeded vertices must already satisfy the induced condition.
    for (int a = 0; a < pat.size; ++a)
        for (int b = a + 1; b < pat.size; ++b) {
            int ga = map[static_cast<std::size_t>(a)], gb = map[static_cast<std::size_t>(b)];
            if (ga < 0 || gb < 0) continue;
            if (ga == gb) return false;
            if (pat.edge(a, b) != g.adjacent(ga, gb)) return false;
        }
    return extend_embedding(g, pat, map, used, pattern_order(pat, map), 0);
}

void canonical_legs(int& i, int& j, int& k) {
    if (i > j) std::swap(i, j);
    if (j > k) std::swap(j, k);
    if (i > j) std::swap(i, j);
}

// ---- induced path DFS -----------------------------------------------------

struct PathSearch {
    const BipartiteGraph& g;
    int k;
    const std::function<bool(const std::vector<int>&)>& fn;
    std::vector<int> path;
    std::vector<char> in_path;
    bool stop = false;

    void run() {
        const int n = g.vertex_count();
        if (k == 1) {
            for (int v = 0; v < n && !stop; ++v) {
                path = {v};
                if (!fn(path)) stop = true;
            }
            return;
        }
        in_path.assign(static_cast<std::size_t>(n), 0);
        for (int s = 0; s < n && !stop; ++s) {
            path = {s};
            in_path[static_cast<std::size_t>(s)] = 1;
            dfs();
            in_path[static_cast<std::size_t>(s)] = 0;
        }
    }

    void dfs() {
        if (stop) return;
        if (static_cast<int>(path.size()) == k) {
            if (path.front() < path.back()) {
                if (!fn(path)) stop = true;
            }
            return;
        }
        int last = path.back();
        for (int w : g.neighbors(last)) {
            if (stop) return;
            if (in_path[static_cast<std::size_t>(w)]) continue;
            bool induced = true;
            for (std::size_t i = 0; i + 1 < path.size() && induced; ++i)
                if (g.adjacent(w, path[i])) induced = false;
            if (!induced) continue;
            path.push_back(w);
            in_path[static_cast<std::size_t>(w)] = 1;
            dfs();
            in_path[static_cast<std::size_t>(w)] = 0;
            path.pop_back();
        }
    }
};

// ---- induced cycle DFS ----------------------------------------------------

// Searches for an induced cycle of length >= min_len whose minimum vertex is
// path[0]; extension vertices adjacent to the anchor may only close the cycle.
struct CycleSearch {
    const BipartiteGraph& g;
    int min_len;
    bool anchored; // path[0], path[1] fixed (edge-anchored variant)
    std::vector<int> path;
    std::vector<char> in_path;
    std::vector<int> found;

    bool dfs() {
        int last = path.back();
        int anchor = path[0];
        for (int w : g.neighbors(last)) {
            if (in_path[static_cast<std::size_t>(w)]) continue;
            if (!anchored && w < anchor) continue;
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size() && !chord; ++i)
                if (g.adjacent(w, path[i])) chord = true;
            if (chord) continue;
            if (g.adjacent(w, anchor)) {
                if (static_cast<int>(path.size()) + 1 >= min_len) {
                    path.push_back(w);
                    found = path;
                    return true;
                }
                continue; // extending past w would leave a chord to the anchor
            }
            path.push_back(w);
            in_path[static_cast<std::size_t>(w)] = 1;
            if (dfs()) return true;
            in_path[static_cast<std::size_t>(w)] = 0;
            path.pop_back();
        }
        return false;
    }
};

std::optional<std::vector<int>> find_cycle_from(const BipartiteGraph& g, int min_len, int a, int b,
                                                bool anchored) {
    CycleSearch cs{g, min_len, anchored, {}, {}, {}};
    cs.in_path.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    cs.path = {a, b};
    cs.in_path[static_cast<std::size_t>(a)] = 1;
    cs.in_path[static_cast<std::size_t>(b)] = 1;
    if (cs.dfs()) return cs.found;
    return std::nullopt;
}

} // namespace

std::string SubgraphWitness::to_line() const {
    std::ostringstream out;
    switch (kind) {
    case PatternKind::Path: out << "path " << path_len; break;
    case PatternKind::Cycle: out << "cycle " << cycle_len; break;
    case PatternKind::Spider: out << "spider " << legs[0] << " " << legs[1] << " " << legs[2]; break;
    }
    out << " :";
    for (int v : embedding) out << " " << v;
    return out.str();
}

bool witness_valid(const BipartiteGraph& g, const SubgraphWitness& w) {
    Pattern pat;
    switch (w.kind) {
    case PatternKind::Path:
        pat = spider_pattern(0, 0, w.path_len - 1);
        break;
    case PatternKind::Cycle: {
        if (w.cycle_len < 4) return false;
        pat = make_pattern(w.cycle_len);
        for (int t = 0; t < w.cycle_len; ++t) pat.add_edge(t, (t + 1) % w.cycle_len);
        break;
    }
    case PatternKind::Spider:
        pat = spider_pattern(w.legs[0], w.legs[1], w.legs[2]);
        break;
    }
    if (static_cast<int>(w.embedding.size()) != pat.size) return false;
    for (int a = 0; a < pat.size; ++a) {
        int ga = w.embedding[static_cast<std::size_t>(a)];
        if (ga < 0 || ga >= g.vertex_count()) return false;
        for (int b = a + 1; b < pat.size; ++b) {
            int gb = w.embedding[static_cast<std::size_t>(b)];
            if (ga == gb) return false;
            if (pat.edge(a, b) != g.adjacent(ga, gb)) return false;
        }
    }
    return true;
}

void for_each_induced_path(const BipartiteGraph& g, int k,
                           const std::function<bool(const std::vector<int>&)>& fn) {
    if (k < 1) return;
    PathSearch ps{g, k, fn, {}, {}, false};
    ps.run();
}

std::optional<SubgraphWitness> find_induced_path(const BipartiteGraph& g, int k) {
    std::optional<SubgraphWitness> out;
    for_each_induced_path(g, k, [&](const std::vector<int>& p) {
        SubgraphWitness w;
        w.kind = PatternKind::Path;
        w.path_len = k;
        w.embedding = p;
        out = std::move(w);
        return false;
    });
    return out;
}

std::optional<SubgraphWitness> find_induced_even_hole(const BipartiteGraph& g, int min_len) {
    for (int s = 0; s < g.vertex_count(); ++s) {
        for (int b : g.neighbors(s)) {
            if (b < s) continue;
            if (auto cyc = find_cycle_from(g, min_len, s, b, false)) {
                SubgraphWitness w;
                w.kind = PatternKind::Cycle;
                w.cycle_len = static_cast<int>(cyc->size());
                w.embedding = *cyc;
                return w;
            }
        }
    }
    return std::nullopt;
}

bool has_induced_even_hole_through_edge(const BipartiteGraph& g, int min_len, int eu, int ev) {
    return find_cycle_from(g, min_len, eu, ev, true).has_value();
}

std::optional<SubgraphWitness> find_induced_spider(const BipartiteGraph& g, int i, int j, int k) {
    canonical_legs(i, j, k);
    Pattern pat = spider_pattern(i, j, k);
    for (int c = 0; c < g.vertex_count(); ++c) {
        std::vector<int> map(static_cast<std::size_t>(pat.size), -1);
        map[0] = c;
        if (embed_pattern(g, pat, map)) {
            SubgraphWitness w;
            w.kind = PatternKind::Spider;
            w.legs = {i, j, k};
            w.embedding = map;
            return w;
        }
    }
    return std::nullopt;
}

bool has_induced_spider_through_edge(const BipartiteGraph& g, int i, int j, int k, int eu, int ev) {
    canonical_legs(i, j, k);
    Pattern pat = spider_pattern(i, j, k);
    for (int a = 0; a < pat.size; ++a) {
        for (int b = a + 1; b < pat.size; ++b) {
            if (!pat.edge(a, b)) continue;
            for (int flip = 0; flip < 2; ++flip) {
                std::vector<int> map(static_cast<std::size_t>(pat.size), -1);
                map[static_cast<std::size_t>(a)] = flip ? ev : eu;
                map[static_cast<std::size_t>(b)] = flip ? eu : ev;
                if (embed_pattern(g, pat, map)) return true;
            }
        }
    }
    return false;
}

ClassReport classify(const BipartiteGraph& g, const ClassifyOptions& opt) {
    ClassReport r;
    r.hole_witness = find_induced_even_hole(g, 6);
    r.is_chordal_bipartite = !r.hole_witness.has_value();
    r.s125_witness = find_induced_spider(g, opt.spider_a[0], opt.spider_a[1], opt.spider_a[2]);
    r.s125_free = !r.s125_witness.has_value();
    r.s333_witness = find_induced_spider(g, opt.spider_b[0], opt.spider_b[1], opt.spider_b[2]);
    r.s333_free = !r.s333_witness.has_value();
    return r;
}

VertexSet p5_midpoints(const BipartiteGraph& g) {
    const int n = g.vertex_count();
    VertexSet mids(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) {
        bool found = false;
        for (int v1 : g.neighbors(m)) {
            if (found) break;
            for (int u1 : g.neighbors(v1)) {
                if (found) break;
                if (u1 == m || g.adjacent(u1, m)) continue;
                for (int v2 : g.neighbors(m)) {
                    if (found) break;
                    if (v2 == v1 || g.adjacent(u1, v2)) continue;
                    for (int u3 : g.neighbors(v2)) {
                        if (u3 == m || u3 == u1) continue;
                        if (g.adjacent(u3, m) || g.adjacent(u3, v1)) continue;
                        found = true;
                        break;
                    }
                }
            }
        }
        if (found) mids.insert(m);
    }
    return mids;
}

} // namespace eds
