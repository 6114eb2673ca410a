#include "eds/lemmas.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "eds/errors.hpp"
#include "eds/recognition.hpp"

namespace eds {

const std::vector<std::string> kLemmaIds = {
    "L1",  "L2",  "C1",  "L5",  "L6",  "C2",  "L7",  "L8",
    "L9",  "L10", "L11", "E5",  "L12", "L13", "L14", "L15",
    "C3",  "L16", "L17", "C4",  "L18", "L19", "L20", "L21",
};

int LemmaReport::violations() const {
    int n = 0;
    for (const auto& e : entries)
        if (e.violated()) ++n;
    return n;
}

const LemmaEntry* LemmaReport::find(const std::string& id) const {
    for (const auto& e : entries)
        if (e.id == id) return &e;
    return nullptr;
}

std::string LemmaReport::to_text() const {
    std::ostringstream out;
    for (const auto& e : entries) {
        out << e.id << " hypothesis=" << (e.hypothesis_met ? "met" : "vacuous")
            << " conclusion=" << (e.conclusion_holds ? "holds" : "VIOLATED");
        if (e.violated()) out << " witness: " << e.witness;
        out << "\n";
    }
    return out.str();
}

namespace {

std::string ids(std::initializer_list<int> vs) {
    std::ostringstream out;
    bool first = true;
    for (int v : vs) {
        if (!first) out << ",";
        out << v;
        first = false;
    }
    return out.str();
}

// Per-component lemma evaluation. `d` is the component's e.d.s. (or, in
// pruner mode, just the committed basis), `basis` the committed seed; levels
// are relative to the basis. Vertex ids are component-local; `to_global`
// remaps them for witness strings.
class LemmaEval {
public:
    LemmaEval(const BipartiteGraph& g, VertexSet d, VertexSet basis, bool full_d,
              const OracleOptions& oopt, std::vector<int> to_global)
        : g_(g), d_(std::move(d)), basis_(std::move(basis)), full_d_(full_d), oopt_(oopt),
          to_global_(std::move(to_global)), mids_(p5_midpoints(g)) {
        n_ = static_cast<std::size_t>(g_.vertex_count());
        if (!basis_.empty()) levels_.emplace(distance_levels(g_, basis_));
        if (full_d_) {
            dom_.assign(n_, -1);
            for (int v = 0; v < g_.vertex_count(); ++v) {
                if (d_.contains(v)) dom_[static_cast<std::size_t>(v)] = v;
                for (int w : g_.neighbors(v))
                    if (d_.contains(w)) dom_[static_cast<std::size_t>(v)] = w;
            }
        }
    }

    int lvl(int v) const { return levels_ ? levels_->level(v) : -2; }

    VertexSet level_set(int i) const {
        if (levels_) return levels_->at(static_cast<std::size_t>(i), n_);
        return VertexSet(n_);
    }

    int gid(int v) const { return to_global_.empty() ? v : to_global_[static_cast<std::size_t>(v)]; }

    // eq. (3): every N2 vertex has at least two N3 neighbors.
    bool eq3() const {
        if (!levels_) return false;
        bool ok = true;
        level_set(2).for_each([&](int u) {
            if (!ok) return;
            int c = 0;
            for (int w : g_.neighbors(u))
                if (lvl(w) == 3) ++c;
            if (c < 2) ok = false;
        });
        return ok;
    }

    // eq. (4): every N3 vertex has a neighbor in N3 or N4.
    bool eq4() const {
        if (!levels_) return false;
        bool ok = true;
        level_set(3).for_each([&](int v) {
            if (!ok) return;
            bool has = false;
            for (int w : g_.neighbors(v))
                if (lvl(w) == 3 || lvl(w) == 4) {
                    has = true;
                    break;
                }
            if (!has) ok = false;
        });
        return ok;
    }

    // Basis context of the distance-level sections: committed vertices on
    // both sides with a distance-3 pair, at the forcing fixpoint (3)+(4).
    bool sec3_ctx() const {
        if (!levels_) return false;
        bool pair = false;
        std::vector<int> bs = basis_.to_vector();
        for (std::size_t a = 0; a < bs.size() && !pair; ++a)
            for (std::size_t b = a + 1; b < bs.size() && !pair; ++b)
                if (g_.side(bs[a]) != g_.side(bs[b]) && g_.distance(bs[a], bs[b]) == 3) pair = true;
        return pair && eq3() && eq4();
    }

    bool n0n1_connected() const {
        if (!levels_) return false;
        VertexSet zone = level_set(0) | level_set(1);
        if (zone.empty()) return true;
        int start = zone.first();
        VertexSet seen(n_);
        seen.insert(start);
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g_.neighbors(v)) {
                if (zone.contains(w) && !seen.contains(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
            }
        }
        return seen == zone;
    }

    // Induced P7s inside N0 ∪ N1 whose midpoint and endpoints are committed
    // and whose four middle vertices sit in N1.
    struct P7Cfg {
        std::array<int, 7> p;
    };

    const std::vector<P7Cfg>& p7_configs() const {
        if (cfgs_) return *cfgs_;
        cfgs_.emplace();
        if (levels_) {
            for_each_induced_path(g_, 7, [&](const std::vector<int>& p) {
                if (basis_.contains(p[0]) && basis_.contains(p[6]) && basis_.contains(p[3]) &&
                    lvl(p[1]) == 1 && lvl(p[2]) == 1 && lvl(p[4]) == 1 && lvl(p[5]) == 1) {
                    P7Cfg c;
                    std::copy(p.begin(), p.end(), c.p.begin());
                    cfgs_->push_back(c);
                }
                return true;
            });
        }
        return *cfgs_;
    }

    // ---- pure (g, d) lemmas -------------------------------------------------

    LemmaEntry l1() const {
        LemmaEntry e{"L1", false, true, ""};
        if (!full_d_) return e;
        for_each_induced_path(g_, 5, [&](const std::vector<int>& p) {
            int u1 = p[0], v1 = p[1], u2 = p[2], v2 = p[3], u3 = p[4];
            if (!d_.contains(u2)) return true;
            e.hypothesis_met = true;
            int v = dom_[static_cast<std::size_t>(u1)];
            int vp = dom_[static_cast<std::size_t>(u3)];
            bool ok = v >= 0 && vp >= 0 && v != vp && v != u1 && vp != u3;
            // (v,u1,v1,u2,v2,u3,v') must induce a P7 with midpoint u2.
            ok = ok && !g_.adjacent(v, u2) && !g_.adjacent(v, u3) && !g_.adjacent(vp, u2) &&
                 !g_.adjacent(vp, u1) && v != v1 && v != v2 && vp != v1 && vp != v2;
            // Every other neighbor of the endpoint contacts the midpoint.
            if (ok)
                for (int w : g_.neighbors(u1))
                    if (w != v && !g_.adjacent(w, u2)) ok = false;
            if (ok)
                for (int w : g_.neighbors(u3))
                    if (w != vp && !g_.adjacent(w, u2)) ok = false;
            if (!ok) {
                e.conclusion_holds = false;
                e.witness =
                    "P5=(" + ids({gid(u1), gid(v1), gid(u2), gid(v2), gid(u3)}) + ") midpoint in D";
                return false;
            }
            return true;
        });
        return e;
    }

    LemmaEntry l2() const {
        LemmaEntry e{"L2", false, true, ""};
        if (!full_d_) return e;
        for_each_induced_path(g_, 5, [&](const std::vector<int>& p) {
            for (int v : p)
                if (d_.contains(v)) return true;
            int u1 = p[0], v1 = p[1], u2 = p[2], v2 = p[3], u3 = p[4];
            int v = dom_[static_cast<std::size_t>(u1)];
            if (v < 0 || v != dom_[static_cast<std::size_t>(u3)]) return true;
            e.hypothesis_met = true;
            bool ok = g_.adjacent(u2, v) &&
                      dom_[static_cast<std::size_t>(v1)] != dom_[static_cast<std::size_t>(v2)];
            if (!ok) {
                e.conclusion_holds = false;
                e.witness = "P5=(" + ids({gid(u1), gid(v1), gid(u2), gid(v2), gid(u3)}) +
                            ") common D-neighbor " + std::to_string(gid(v));
                return false;
            }
            return true;
        });
        return e;
    }

    LemmaEntry c1() const {
        LemmaEntry e{"C1", false, true, ""};
        if (!full_d_) return e;
        for_each_induced_path(g_, 7, [&](const std::vector<int>& p) {
            for (int v : p)
                if (d_.contains(v)) return true;
            int du = dom_[static_cast<std::size_t>(p[0])];
            if (du < 0) return true;
            for (std::size_t i : {std::size_t{2}, std::size_t{4}, std::size_t{6}})
                if (dom_[static_cast<std::size_t>(p[i])] != du) return true;
            e.hypothesis_met = true;
            int d1 = dom_[static_cast<std::size_t>(p[1])];
            if (d1 == dom_[static_cast<std::size_t>(p[3])] &&
                d1 == dom_[static_cast<std::size_t>(p[5])]) {
                e.conclusion_holds = false;
                e.witness = "P7 through common D-neighbor " + std::to_string(gid(du));
                return false;
            }
            return true;
        });
        return e;
    }

    // ---- distance-level lemmas ------------------------------------------------

    LemmaEntry l5() const {
        LemmaEntry e{"L5", sec3_ctx(), true, ""};
        if (!e.hypothesis_met) return e;
        for_each_induced_path(g_, 6, [&](const std::vector<int>& p) {
            for (int flip = 0; flip < 2; ++flip) {
                int end = flip ? p[5] : p[0];
                if (lvl(end) != 2) continue;
                bool rest01 = true;
                for (int i = 0; i < 6; ++i) {
                    int v = p[static_cast<std::size_t>(i)];
                    if (v == end) continue;
                    if (lvl(v) != 0 && lvl(v) != 1) rest01 = false;
                }
                if (rest01) {
                    e.conclusion_holds = false;
                    e.witness = "N2 vertex " + std::to_string(gid(end)) + " ends a P6 in N0+N1";
                    return false;
                }
            }
            return true;
        });
        return e;
    }

    LemmaEntry l6() const {
        LemmaEntry e{"L6", sec3_ctx(), true, ""};
        if (!e.hypothesis_met) return e;
        bool done = false;
        auto fail = [&](const std::string& w) {
            e.conclusion_holds = false;
            e.witness = w;
            done = true;
        };
        if (levels_->depth() >= 6 && !level_set(6).empty()) {
            fail("N6 nonempty: vertex " + std::to_string(gid(level_set(6).first())));
            return e;
        }
        level_set(5).for_each([&](int a) {
            if (done) return;
            for (int b : g_.neighbors(a))
                if (lvl(b) == 5) {
                    fail("edge in N5: " + ids({gid(a), gid(b)}));
                    return;
                }
        });
        if (done) return e;
        level_set(4).for_each([&](int a) {
            if (done) return;
            for (int b : g_.neighbors(a)) {
                if (lvl(b) != 4 || b < a) continue;
                for (int v : {a, b})
                    for (int w : g_.neighbors(v))
                        if (lvl(w) == 5) {
                            fail("N4 edge " + ids({gid(a), gid(b)}) + " contacts N5 at " +
                                 std::to_string(gid(w)));
                            return;
                        }
            }
        });
        if (done) return e;
        level_set(3).for_each([&](int r3) {
            if (done) return;
            for (int s3 : g_.neighbors(r3)) {
                if (lvl(s3) != 3) continue;
                for (int r4 : g_.neighbors(s3)) {
                    if (lvl(r4) != 4 || g_.adjacent(r4, r3)) continue;
                    for (int r5 : g_.neighbors(r4)) {
                        if (r5 == s3 || (lvl(r5) != 4 && lvl(r5) != 5)) continue;
                        if (g_.adjacent(r5, r3)) continue;
                        fail("P4 (" + ids({gid(r3), gid(s3), gid(r4), gid(r5)}) +
                             ") off an N3 edge");
                        return;
                    }
                }
            }
        });
        if (done) return e;
        // Packaged form: no N2 endpoint of a P5 descending through the levels.
        for_each_induced_path(g_, 5, [&](const std::vector<int>& p) {
            for (int flip = 0; flip < 2; ++flip) {
                std::array<int, 5> q;
                for (int i = 0; i < 5; ++i)
                    q[static_cast<std::size_t>(i)] =
                        flip ? p[static_cast<std::size_t>(4 - i)] : p[static_cast<std::size_t>(i)];
                if (lvl(q[0]) != 2 || lvl(q[1]) != 3) continue;
                int l2 = lvl(q[2]), l3 = lvl(q[3]), l4 = lvl(q[4]);
                if ((l2 == 3 || l2 == 4) && l3 >= 3 && l3 <= 5 && l4 >= 3 && l4 <= 6) {
                    fail("N2 vertex " + std::to_string(gid(q[0])) + " ends a descending P5");
                    return false;
                }
            }
            return true;
        });
        return e;
    }

    LemmaEntry c2() const {
        LemmaEntry e{"C2", false, true, ""};
        if (!sec3_ctx() || !full_d_) return e;
        bool done = false;
        level_set(2).for_each([&](int r2) {
            if (done) return;
            for (int r3 : g_.neighbors(r2)) {
                if (lvl(r3) != 3 || !d_.contains(r3)) continue;
                e.hypothesis_met = true;
                for (int r4 : g_.neighbors(r3)) {
                    if (r4 == r2 || g_.adjacent(r4, r2)) continue;
                    int l4 = lvl(r4);
                    if (l4 != 3 && l4 != 4) continue;
                    for (int r5 : g_.neighbors(r4)) {
                        if (r5 == r3 || g_.adjacent(r5, r3) || g_.adjacent(r5, r2)) continue;
                        int l5 = lvl(r5);
                        if (l5 < 3 || l5 > 5) continue;
                        e.conclusion_holds = false;
                        e.witness = "P4 (" + ids({gid(r2), gid(r3), gid(r4), gid(r5)}) +
                                    ") off D-vertex " + std::to_string(gid(r3));
                        done = true;
                        return;
                    }
                }
            }
        });
        return e;
    }

    LemmaEntry l7() const {
        LemmaEntry e{"L7", false, true, ""};
        if (!sec3_ctx() || !full_d_) return e;
        for (Side s : {Side::X, Side::Y}) {
            std::vector<int> dn3;
            level_set(3).for_each([&](int v) {
                if (d_.contains(v) && g_.side(v) == s) dn3.push_back(v);
            });
            for (std::size_t a = 0; a < dn3.size(); ++a) {
                for (std::size_t b = a + 1; b < dn3.size(); ++b) {
                    int r3 = dn3[a], s3 = dn3[b];
                    for (int r2 : g_.neighbors(r3)) {
                        if (lvl(r2) != 2) continue;
                        for (int r4 : g_.neighbors(r3)) {
                            if (r4 == r2 || (lvl(r4) != 3 && lvl(r4) != 4)) continue;
                            for (int s2 : g_.neighbors(s3)) {
                                if (lvl(s2) != 2 || s2 == r2 || s2 == r4) continue;
                                for (int s4 : g_.neighbors(s3)) {
                                    if (s4 == s2 || s4 == r2 || s4 == r4 ||
                                        (lvl(s4) != 3 && lvl(s4) != 4))
                                        continue;
                                    if (g_.adjacent(r2, s3) || g_.adjacent(s2, r3) ||
                                        g_.adjacent(r4, s3) || g_.adjacent(s4, r3))
                                        continue;
                                    e.hypothesis_met = true;
                                    bool common = false;
                                    for (int w : g_.neighbors(r2))
                                        if (lvl(w) == 1 && g_.adjacent(w, s2)) common = true;
                                    if (!common && !e.violated()) {
                                        e.conclusion_holds = false;
                                        e.witness = "2P3 (" + ids({gid(r2), gid(r3), gid(r4)}) +
                                                    ")+(" + ids({gid(s2), gid(s3), gid(s4)}) +
                                                    ") without a common N1 neighbor";
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        return e;
    }

    LemmaEntry l8() const {
        LemmaEntry e{"L8", false, true, ""};
        if (!sec3_ctx() || !full_d_) return e;
        e.hypothesis_met = true;
        int cx = 0, cy = 0;
        level_set(3).for_each([&](int v) {
            if (!d_.contains(v)) return;
            (g_.side(v) == Side::X ? cx : cy)++;
        });
        if (cx > 2 || cy > 2) {
            e.conclusion_holds = false;
            e.witness =
                "D cap N3 has " + std::to_string(cx) + " X / " + std::to_string(cy) + " Y vertices";
        }
        return e;
    }

    LemmaEntry l9() const {
        LemmaEntry e{"L9", false, true, ""};
        if (!sec3_ctx() || !full_d_) return e;
        e.hypothesis_met = true;
        level_set(5).for_each([&](int v) {
            if (d_.contains(v) && mids_.contains(v) && !e.violated()) {
                e.conclusion_holds = false;
                e.witness = "D vertex " + std::to_string(gid(v)) + " in N5 is a P5 midpoint";
            }
        });
        return e;
    }

    // ---- lemmas of the no-P5-midpoint case ------------------------------------

    bool no_d_p5_midpoint() const {
        bool ok = true;
        d_.for_each([&](int v) {
            if (mids_.contains(v)) ok = false;
        });
        return ok;
    }

    LemmaEntry l10() const {
        LemmaEntry e{"L10", false, true, ""};
        if (!full_d_ || !no_d_p5_midpoint()) return e;
        for_each_induced_path(g_, 8, [&](const std::vector<int>& p) {
            e.hypothesis_met = true;
            for (std::size_t i : {std::size_t{0}, std::size_t{2}, std::size_t{3}, std::size_t{4},
                                  std::size_t{5}, std::size_t{7}}) {
                if (d_.contains(p[i])) {
                    e.conclusion_holds = false;
                    e.witness = "P8 position " + std::to_string(i + 1) + " vertex " +
                                std::to_string(gid(p[i])) + " in D";
                    return false;
                }
            }
            return true;
        });
        return e;
    }

    LemmaEntry l11() const {
        LemmaEntry e{"L11", false, true, ""};
        if (!full_d_ || !no_d_p5_midpoint()) return e;
        for_each_induced_path(g_, 8, [&](const std::vector<int>& p) {
            e.hypothesis_met = true;
            if (!d_.contains(p[1]) || !d_.contains(p[6])) {
                e.conclusion_holds = false;
                e.witness = "P8 from " + std::to_string(gid(p[0])) + " misses a forced D-vertex";
                return false;
            }
            return true;
        });
        return e;
    }

    // ---- the P7-in-basis configuration ---------------------------------------

    LemmaEntry e5(std::map<std::vector<int>, bool>& closure_cache) const {
        LemmaEntry e{"E5", false, true, ""};
        if (!full_d_) return e;
        for (const P7Cfg& c : p7_configs()) {
            std::vector<int> key{c.p[0], c.p[3], c.p[6]};
            std::sort(key.begin(), key.end());
            auto it = closure_cache.find(key);
            if (it == closure_cache.end()) {
                VertexSet assumed(n_);
                assumed.insert(c.p[0]);
                assumed.insert(c.p[3]);
                assumed.insert(c.p[6]);
                ForcedExcluded fe = forced_excluded_by_oracle(g_, assumed, oopt_);
                bool closed = !fe.infeasible && fe.forced.is_subset_of(basis_);
                it = closure_cache.emplace(std::move(key), closed).first;
            }
            if (!it->second) continue;
            e.hypothesis_met = true;
            if (!n0n1_connected()) {
                e.conclusion_holds = false;
                e.witness = "P7 config at midpoint " + std::to_string(gid(c.p[3])) +
                            " with disconnected N0+N1";
                return e;
            }
        }
        return e;
    }

    LemmaEntry l12() const {
        LemmaEntry e{"L12", false, true, ""};
        if (!eq3() || !eq4()) return e;
        VertexSet n2 = level_set(2);
        for (const P7Cfg& c : p7_configs()) {
            e.hypothesis_met = true;
            VertexSet pair(n_);
            pair.insert(c.p[1]);
            pair.insert(c.p[5]);
            if (!g_.cojoins(pair, n2)) {
                e.conclusion_holds = false;
                e.witness =
                    "v1/v3 of the P7 at midpoint " + std::to_string(gid(c.p[3])) + " contact N2";
                return e;
            }
        }
        return e;
    }

    LemmaEntry l13() const {
        LemmaEntry e{"L13", false, true, ""};
        if (!eq3() || !eq4()) return e;
        VertexSet n2 = level_set(2);
        for (const P7Cfg& c : p7_configs()) {
            if (g_.distance(c.p[0], c.p[6]) != 6) continue;
            e.hypothesis_met = true;
            if (!g_.cojoins(g_.open_neighborhood(c.p[0]), n2) ||
                !g_.cojoins(g_.open_neighborhood(c.p[6]), n2)) {
                e.conclusion_holds = false;
                e.witness = "endpoint neighborhood of the P7 at midpoint " +
                            std::to_string(gid(c.p[3])) + " contacts N2";
                return e;
            }
        }
        return e;
    }

    LemmaEntry l14() const {
        LemmaEntry e{"L14", false, true, ""};
        if (!eq3() || !eq4() || !n0n1_connected()) return e;
        for (const P7Cfg& c : p7_configs()) {
            bool n2_on_end_side = false;
            level_set(2).for_each([&](int v) {
                if (g_.side(v) == g_.side(c.p[0])) n2_on_end_side = true;
            });
            if (!n2_on_end_side) continue;
            e.hypothesis_met = true;
            int dd = g_.distance(c.p[0], c.p[6]);
            if (dd != 4) {
                e.conclusion_holds = false;
                e.witness = "P7 endpoints " + ids({gid(c.p[0]), gid(c.p[6])}) + " at distance " +
                            std::to_string(dd);
                return e;
            }
        }
        return e;
    }

    std::vector<P7Cfg> sec6_configs(Side mid_side) const {
        std::vector<P7Cfg> out;
        for (const P7Cfg& c : p7_configs())
            if (g_.side(c.p[3]) == mid_side && g_.side(c.p[0]) != mid_side) out.push_back(c);
        return out;
    }

    bool sec6_ctx() const { return eq3() && eq4() && n0n1_connected(); }

    LemmaEntry l15() const {
        LemmaEntry e{"L15", false, true, ""};
        if (!sec6_ctx()) return e;
        for (Side mid : {Side::Y, Side::X}) {
            if (sec6_configs(mid).empty()) continue;
            e.hypothesis_met = true;
            bool n5_ok = true;
            level_set(5).for_each([&](int v) {
                if (g_.side(v) == mid) n5_ok = false;
            });
            bool n4_indep = true;
            level_set(4).for_each([&](int a) {
                for (int b : g_.neighbors(a))
                    if (lvl(b) == 4) n4_indep = false;
            });
            if (!n5_ok || !n4_indep) {
                e.conclusion_holds = false;
                e.witness = std::string("midpoint side ") + side_char(mid) +
                            (!n5_ok ? ": N5 reaches the midpoint side" : ": N4 not independent");
                return e;
            }
        }
        return e;
    }

    LemmaEntry c3() const {
        LemmaEntry e{"C3", false, true, ""};
        if (!sec6_ctx()) return e;
        if (sec6_configs(Side::Y).empty() || sec6_configs(Side::X).empty()) return e;
        e.hypothesis_met = true;
        if (!level_set(5).empty()) {
            e.conclusion_holds = false;
            e.witness = "both-side P7 configs but N5 nonempty at " +
                        std::to_string(gid(level_set(5).first()));
        }
        return e;
    }

    // Is m the midpoint of an induced P5 contained in N2..N5?
    bool deep_p5_midpoint(int m) const {
        auto deep = [&](int v) { return lvl(v) >= 2 && lvl(v) <= 5; };
        if (!deep(m)) return false;
        for (int v1 : g_.neighbors(m)) {
            if (!deep(v1)) continue;
            for (int u1 : g_.neighbors(v1)) {
                if (u1 == m || !deep(u1) || g_.adjacent(u1, m)) continue;
                for (int v2 : g_.neighbors(m)) {
                    if (v2 == v1 || !deep(v2) || g_.adjacent(u1, v2)) continue;
                    for (int u3 : g_.neighbors(v2)) {
                        if (u3 == m || u3 == u1 || !deep(u3)) continue;
                        if (g_.adjacent(u3, m) || g_.adjacent(u3, v1)) continue;
                        return true;
                    }
                }
            }
        }
        return false;
    }

    LemmaEntry l16() const {
        LemmaEntry e{"L16", false, true, ""};
        if (!sec6_ctx() || !full_d_) return e;
        for (Side mid : {Side::Y, Side::X}) {
            if (sec6_configs(mid).empty()) continue;
            e.hypothesis_met = true;
            Side end_side = mid == Side::Y ? Side::X : Side::Y;
            int badv = -1;
            level_set(4).for_each([&](int r4) {
                if (badv >= 0 || !d_.contains(r4) || g_.side(r4) != end_side) return;
                if (deep_p5_midpoint(r4)) badv = r4;
            });
            if (badv >= 0) {
                e.conclusion_holds = false;
                e.witness = "D vertex " + std::to_string(gid(badv)) +
                            " in N4 is a P5 midpoint within N2..N5";
                return e;
            }
        }
        return e;
    }

    LemmaEntry l17() const {
        LemmaEntry e{"L17", false, true, ""};
        if (!sec6_ctx() || !full_d_) return e;
        for (Side mid : {Side::Y, Side::X}) {
            if (sec6_configs(mid).empty()) continue;
            e.hypothesis_met = true;
            int c = 0;
            level_set(3).for_each([&](int v) {
                if (d_.contains(v) && g_.side(v) == mid) ++c;
            });
            if (c > 1) {
                e.conclusion_holds = false;
                e.witness =
                    std::string("|D cap N3 cap ") + side_char(mid) + "| = " + std::to_string(c);
                return e;
            }
        }
        return e;
    }

    LemmaEntry c4() const {
        LemmaEntry e{"C4", false, true, ""};
        if (!sec6_ctx() || !full_d_) return e;
        for (Side mid : {Side::Y, Side::X}) {
            if (sec6_configs(mid).empty()) continue;
            e.hypothesis_met = true;
            int cmid = 0, cend = 0;
            level_set(3).for_each([&](int v) {
                if (!d_.contains(v)) return;
                (g_.side(v) == mid ? cmid : cend)++;
            });
            if (cmid > 1 || cend > 2) {
                e.conclusion_holds = false;
                e.witness = "D cap N3 counts " + std::to_string(cmid) + "/" + std::to_string(cend);
                return e;
            }
        }
        return e;
    }

    // ---- pairs of P7s with one-sided D-midpoints ------------------------------

    struct DP7 {
        std::array<int, 7> p;
    };

    bool any_d_mid_p7(Side mid_side) const {
        bool found = false;
        for_each_induced_path(g_, 7, [&](const std::vector<int>& p) {
            if (d_.contains(p[3]) && g_.side(p[3]) == mid_side) {
                found = true;
                return false;
            }
            return true;
        });
        return found;
    }

    std::vector<DP7> d_mid_p7_family(Side mid_side) const {
        std::vector<DP7> out;
        for_each_induced_path(g_, 7, [&](const std::vector<int>& p) {
            if (d_.contains(p[3]) && g_.side(p[3]) == mid_side && d_.contains(p[0]) &&
                d_.contains(p[6])) {
                DP7 c;
                std::copy(p.begin(), p.end(), c.p.begin());
                out.push_back(c);
            }
            return true;
        });
        return out;
    }

    int set_distance(const std::array<int, 7>& a, const std::array<int, 7>& b) const {
        int best = -1;
        for (int u : a)
            for (int v : b) {
                int dd = g_.distance(u, v);
                if (dd >= 0 && (best < 0 || dd < best)) best = dd;
            }
        return best;
    }

    void sec7(LemmaEntry& e18, LemmaEntry& e19, LemmaEntry& e20, LemmaEntry& e21) const {
        if (!full_d_) return;
        for (Side mid : {Side::Y, Side::X}) {
            Side other = mid == Side::Y ? Side::X : Side::Y;
            if (any_d_mid_p7(other)) continue; // the section's one-sidedness assumption
            std::vector<DP7> fam = d_mid_p7_family(mid);
            if (fam.empty()) continue;
            VertexSet midv(n_);
            for (const DP7& c : fam) midv.insert(c.p[3]);
            e21.hypothesis_met = true;
            if (midv.count() > 2 && e21.conclusion_holds) {
                e21.conclusion_holds = false;
                e21.witness = std::to_string(midv.count()) + " P7 midpoints in D on side " +
                              side_char(mid);
            }
            if (midv.count() < 2) continue;
            e18.hypothesis_met = e19.hypothesis_met = e20.hypothesis_met = true;
            for (std::size_t a = 0; a < fam.size(); ++a) {
                for (std::size_t b = a + 1; b < fam.size(); ++b) {
                    if (fam[a].p[3] == fam[b].p[3]) continue;
                    int dd = set_distance(fam[a].p, fam[b].p);
                    std::string wit =
                        "P7 pair at midpoints " + ids({gid(fam[a].p[3]), gid(fam[b].p[3])});
                    if (dd >= 0 && dd < 2 && e18.conclusion_holds) {
                        e18.conclusion_holds = false;
                        e18.witness = wit + " at distance " + std::to_string(dd);
                    }
                    if (dd >= 0 && dd < 3 && e19.conclusion_holds) {
                        e19.conclusion_holds = false;
                        e19.witness = wit + " at distance " + std::to_string(dd);
                    }
                    int dm = g_.distance(fam[a].p[3], fam[b].p[3]);
                    if (dm != 4 && e20.conclusion_holds) {
                        e20.conclusion_holds = false;
                        e20.witness = wit + " midpoint distance " + std::to_string(dm);
                    }
                }
            }
        }
    }

private:
    const BipartiteGraph& g_;
    VertexSet d_;
    VertexSet basis_;
    bool full_d_;
    OracleOptions oopt_;
    std::vector<int> to_global_;
    VertexSet mids_;
    std::size_t n_ = 0;
    std::optional<DistanceLevels> levels_;
    std::vector<int> dom_;
    mutable std::optional<std::vector<P7Cfg>> cfgs_;
};

} // namespace

LemmaReport check_lemmas(const BipartiteGraph& g, const VertexSet& d, const VertexSet& d_basis,
                         const OracleOptions& oracle_opt) {
    if (auto bad = verify_eds(g, d))
        throw EdsError(Errc::NotAnEds, "check_lemmas: d fails verify_eds at vertex " +
                                           std::to_string(bad->vertex) + " (count " +
                                           std::to_string(bad->count) + ")");
    if (!d_basis.is_subset_of(d))
        throw EdsError(Errc::BadVertex, "check_lemmas: d_basis must be a subset of d");

    LemmaReport rep;
    for (const std::string& id : kLemmaIds) rep.entries.push_back({id, false, true, ""});
    auto merge = [&](const LemmaEntry& e) {
        for (auto& cur : rep.entries) {
            if (cur.id != e.id) continue;
            cur.hypothesis_met = cur.hypothesis_met || e.hypothesis_met;
            if (e.violated() && !cur.violated()) {
                cur.conclusion_holds = false;
                cur.witness = e.witness;
            }
        }
    };

    for (const VertexSet& comp : g.components()) {
        auto ind = g.induced_subgraph(comp);
        const std::size_t cn = ind.to_parent.size();
        VertexSet cd(cn), cb(cn);
        for (std::size_t i = 0; i < cn; ++i) {
            int pv = ind.to_parent[i];
            if (d.contains(pv)) cd.insert(static_cast<int>(i));
            if (d_basis.contains(pv)) cb.insert(static_cast<int>(i));
        }
        LemmaEval ev(ind.graph, std::move(cd), std::move(cb), true, oracle_opt, ind.to_parent);
        merge(ev.l1());
        merge(ev.l2());
        merge(ev.c1());
        merge(ev.l5());
        merge(ev.l6());
        merge(ev.c2());
        merge(ev.l7());
        merge(ev.l8());
        merge(ev.l9());
        merge(ev.l10());
        merge(ev.l11());
        std::map<std::vector<int>, bool> closure_cache;
        merge(ev.e5(closure_cache));
        merge(ev.l12());
        merge(ev.l13());
        merge(ev.l14());
        merge(ev.l15());
        merge(ev.c3());
        merge(ev.l16());
        merge(ev.l17());
        merge(ev.c4());
        LemmaEntry e18{"L18", false, true, ""}, e19{"L19", false, true, ""},
            e20{"L20", false, true, ""}, e21{"L21", false, true, ""};
        ev.sec7(e18, e19, e20, e21);
        merge(e18);
        merge(e19);
        merge(e20);
        merge(e21);
    }
    return rep;
}

std::string first_failed_pruner(const BipartiteGraph& g, const VertexSet& basis) {
    if (basis.empty()) return "";
    LemmaEval ev(g, basis, basis, false, OracleOptions{}, {});
    for (const LemmaEntry& e : {ev.l12(), ev.l13(), ev.l14(), ev.l15(), ev.c3()})
        if (e.violated()) return e.id;
    return "";
}

} // namespace eds
