#include "eds/state.hpp"

#include <algorithm>
#include <optional>

#include "eds/errors.hpp"
#include "eds/recognition.hpp"

namespace eds {

DominationState::DominationState(const BipartiteGraph& g)
    : g_(&g),
      status_(static_cast<std::size_t>(g.vertex_count()), VertexStatus::Open),
      dominated_(static_cast<std::size_t>(g.vertex_count()), 0),
      basis_(static_cast<std::size_t>(g.vertex_count())) {}

void DominationState::seed(int v) {
    if (status(v) == VertexStatus::Excluded)
        throw EdsError(Errc::ConflictExcluded, "seed on excluded vertex " + std::to_string(v));
    if (record_) trace_.seeded(v);
    commit(v);
}

void DominationState::assert_in_d(int v, const std::string& rule) {
    if (status(v) == VertexStatus::Excluded)
        throw EdsError(Errc::ConflictExcluded, "assert_in_d on excluded vertex " + std::to_string(v));
    if (status(v) == VertexStatus::InD) return;
    if (record_) trace_.forced(v, rule);
    commit(v);
}

void DominationState::commit(int v) {
    if (status(v) == VertexStatus::InD) return;
    status_[static_cast<std::size_t>(v)] = VertexStatus::InD;
    basis_.insert(v);
    if (++dominated_[static_cast<std::size_t>(v)] > 1) mark_infeasible("DominationClash");
    for (int w : g_->neighbors(v)) {
        if (status(w) == VertexStatus::InD) mark_infeasible("DominationClash");
        else status_[static_cast<std::size_t>(w)] = VertexStatus::Excluded;
        if (++dominated_[static_cast<std::size_t>(w)] > 1) mark_infeasible("DominationClash");
    }
    levels_ = std::make_shared<DistanceLevels>(distance_levels(*g_, basis_));
}

void DominationState::exclude(int v, const std::string& rule) {
    if (status(v) == VertexStatus::Excluded) return;
    if (status(v) == VertexStatus::InD) {
        mark_infeasible(rule);
        return;
    }
    status_[static_cast<std::size_t>(v)] = VertexStatus::Excluded;
    if (record_) trace_.excluded(v, rule);
}

void DominationState::mark_infeasible(const std::string& rule) {
    if (!feasible_) return;
    feasible_ = false;
    infeasible_rule_ = rule;
    if (record_) trace_.infeasible(rule);
}

bool DominationState::fully_determined() const {
    if (!feasible_) return false;
    for (int c : dominated_)
        if (c != 1) return false;
    return true;
}

namespace {

enum class RuleResult { None, Changed };

struct Propagator {
    DominationState& st;
    const PropagateOptions& opt;
    std::optional<VertexSet> mids; // P5 midpoints of the graph, lazily computed

    const VertexSet& midpoints() {
        if (!mids) mids = p5_midpoints(st.graph());
        return *mids;
    }

    // eq. (1): nothing of N1 or N2 can be in D.
    RuleResult r_levels() {
        const DistanceLevels* lv = st.levels();
        if (!lv) return RuleResult::None;
        bool changed = false;
        for (std::size_t i = 1; i <= 2 && i < lv->levels.size(); ++i) {
            lv->levels[i].for_each([&](int v) {
                if (st.open(v)) {
                    st.exclude(v, "R-levels");
                    changed = true;
                }
            });
        }
        return changed ? RuleResult::Changed : RuleResult::None;
    }

    // eq. (2): every N2 vertex needs a D-neighbor in N3.
    RuleResult r_deg() {
        const DistanceLevels* lv = st.levels();
        if (!lv || lv->levels.size() <= 2) return RuleResult::None;
        bool dead = false;
        lv->levels[2].for_each([&](int u) {
            if (dead) return;
            bool has = false;
            for (int w : st.graph().neighbors(u))
                if (lv->level(w) == 3 && st.open(w)) {
                    has = true;
                    break;
                }
            if (!has) {
                st.mark_infeasible("R-deg");
                dead = true;
            }
        });
        return RuleResult::None;
    }

    // Candidate dominators of w: Open vertices of N[w] whose own closed
    // neighborhood is still untouched (anything else would double-dominate).
    std::vector<int> candidates(int w) const {
        std::vector<int> ids = st.graph().neighbors(w);
        ids.insert(std::lower_bound(ids.begin(), ids.end(), w), w);
        std::vector<int> out;
        for (int u : ids) {
            if (!st.open(u)) continue;
            bool clean = st.dominated_by(u) == 0;
            if (clean)
                for (int x : st.graph().neighbors(u))
                    if (st.dominated_by(x) != 0) {
                        clean = false;
                        break;
                    }
            if (clean) out.push_back(u);
        }
        return out;
    }

    RuleResult r_unit_basic() {
        const int n = st.graph().vertex_count();
        for (int w = 0; w < n; ++w) {
            if (st.dominated_by(w) != 0) continue;
            std::vector<int> cand = candidates(w);
            if (cand.empty()) {
                st.mark_infeasible("R-unit");
                return RuleResult::None;
            }
            if (cand.size() == 1) {
                st.assert_in_d(cand[0], "R-unit");
                return RuleResult::Changed;
            }
        }
        return RuleResult::None;
    }

    // Failed-literal probing: a candidate whose assertion collapses under the
    // unconditionally sound rules lies in no e.d.s. extending the basis.
    RuleResult r_unit_probe() {
        const int n = st.graph().vertex_count();
        for (int w = 0; w < n; ++w) {
            if (st.dominated_by(w) != 0) continue;
            for (int u : candidates(w)) {
                DominationState scratch = st;
                scratch.set_recording(false);
                scratch.trace().events.clear();
                scratch.assert_in_d(u, "probe");
                PropagateOptions basic;
                basic.enable_p8 = false;
                basic.enable_probe = false;
                scratch = propagate(std::move(scratch), basic);
                if (!scratch.feasible()) {
                    st.exclude(u, "R-unit");
                    return RuleResult::Changed;
                }
            }
        }
        return RuleResult::None;
    }

    // Lemma-1 closure around an endpoint of a P5 whose midpoint is in D: the
    // endpoint's dominator must avoid N(mid); if no neighbor does, the branch
    // dies, and if exactly one does, it is forced.
    RuleResult p5_endpoint_closure(int endpoint, int mid) {
        int cand = -1;
        int count = 0;
        for (int w : st.graph().neighbors(endpoint)) {
            if (st.graph().adjacent(w, mid)) continue;
            ++count;
            if (cand < 0) cand = w;
            if (count > 1) break;
        }
        if (count == 0) {
            st.mark_infeasible("R-p5mid");
            return RuleResult::None;
        }
        if (count == 1) {
            if (st.status(cand) == VertexStatus::Excluded) {
                st.mark_infeasible("R-p5mid");
                return RuleResult::None;
            }
            if (st.open(cand)) {
                st.assert_in_d(cand, "R-p5mid");
                return RuleResult::Changed;
            }
        }
        return RuleResult::None;
    }

    RuleResult r_p5mid() {
        const BipartiteGraph& g = st.graph();
        for (int m : st.d_basis().to_vector()) {
            for (int v1 : g.neighbors(m)) {
                for (int v2 : g.neighbors(m)) {
                    if (v2 <= v1) continue;
                    for (int u1 : g.neighbors(v1)) {
                        if (u1 == m || g.adjacent(u1, m) || g.adjacent(u1, v2)) continue;
                        for (int u3 : g.neighbors(v2)) {
                            if (u3 == m || u3 == u1) continue;
                            if (g.adjacent(u3, m) || g.adjacent(u3, v1)) continue;
                            // (u1,v1,m,v2,u3) is an induced P5 with midpoint m in D.
                            RuleResult r = p5_endpoint_closure(u1, m);
                            if (!st.feasible()) return RuleResult::None;
                            if (r == RuleResult::Changed) return r;
                            r = p5_endpoint_closure(u3, m);
                            if (!st.feasible()) return RuleResult::None;
                            if (r == RuleResult::Changed) return r;
                        }
                    }
                }
            }
        }
        return RuleResult::None;
    }

    // Lemmas 9/10 packaged as a rule: valid only while no committed vertex is
    // a P5 midpoint (the section-4 case assumption).
    RuleResult r_p8() {
        bool guard = true;
        st.d_basis().for_each([&](int m) {
            if (midpoints().contains(m)) guard = false;
        });
        if (!guard) return RuleResult::None;
        bool changed = false;
        for_each_induced_path(st.graph(), 8, [&](const std::vector<int>& p) {
            for (std::size_t pos : {std::size_t{1}, std::size_t{6}}) {
                int v = p[pos];
                if (st.status(v) == VertexStatus::Excluded) {
                    st.mark_infeasible("R-p8");
                    return false;
                }
                if (st.open(v)) {
                    st.assert_in_d(v, "R-p8");
                    changed = true;
                }
            }
            for (std::size_t pos : {std::size_t{0}, std::size_t{2}, std::size_t{3}, std::size_t{4},
                                    std::size_t{5}, std::size_t{7}}) {
                int v = p[pos];
                if (st.status(v) == VertexStatus::InD) {
                    st.mark_infeasible("R-p8");
                    return false;
                }
                if (st.open(v)) {
                    st.exclude(v, "R-p8");
                    changed = true;
                }
            }
            return st.feasible();
        });
        if (!st.feasible()) return RuleResult::None;
        return changed ? RuleResult::Changed : RuleResult::None;
    }

    RuleResult apply(const std::string& rule) {
        if (rule == "R-levels") return r_levels();
        if (rule == "R-deg") return r_deg();
        if (rule == "R-unit") {
            RuleResult r = r_unit_basic();
            if (r == RuleResult::Changed || !st.feasible()) return r;
            if (opt.enable_probe) return r_unit_probe();
            return RuleResult::None;
        }
        if (rule == "R-p5mid") return r_p5mid();
        if (rule == "R-p8") return opt.enable_p8 ? r_p8() : RuleResult::None;
        return RuleResult::None;
    }
};

} // namespace

DominationState propagate(DominationState state, const PropagateOptions& opt) {
    if (!state.feasible()) return state;
    static const std::vector<std::string> kDefaultOrder = {"R-levels", "R-deg", "R-unit", "R-p5mid",
                                                           "R-p8"};
    const std::vector<std::string>& order = opt.rule_order.empty() ? kDefaultOrder : opt.rule_order;
    Propagator prop{state, opt, std::nullopt};
    bool restart = true;
    while (restart && state.feasible()) {
        restart = false;
        for (const std::string& rule : order) {
            RuleResult r = prop.apply(rule);
            if (!state.feasible()) return state;
            if (r == RuleResult::Changed) {
                restart = true;
                break;
            }
        }
    }
    return state;
}

namespace {

Reduction make_reduction(const DominationState& state, const VertexSet& chosen, bool carry_all) {
    const BipartiteGraph& g = state.graph();
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    VertexSet removed(n);
    chosen.for_each([&](int u) { removed |= g.closed_neighborhood(u); });
    VertexSet keep = g.vertices() - removed;
    auto ind = g.induced_subgraph(keep);
    VertexSet excl_parent(n);
    chosen.for_each([&](int u) { excl_parent |= g.second_neighborhood(u); });
    if (carry_all) {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (state.status(v) == VertexStatus::Excluded) excl_parent.insert(v);
    }
    Reduction red;
    red.child_excluded = VertexSet(ind.to_parent.size());
    excl_parent.for_each([&](int v) {
        int c = ind.from_parent[static_cast<std::size_t>(v)];
        if (c >= 0) red.child_excluded.insert(c);
    });
    red.child = std::move(ind.graph);
    red.to_parent = std::move(ind.to_parent);
    red.from_parent = std::move(ind.from_parent);
    return red;
}

} // namespace

Reduction reduce_by_forced(const DominationState& state, int u) {
    if (state.status(u) != VertexStatus::InD)
        throw EdsError(Errc::BadVertex, "reduce_by_forced: vertex is not InD");
    VertexSet chosen(static_cast<std::size_t>(state.graph().vertex_count()));
    chosen.insert(u);
    return make_reduction(state, chosen, false);
}

Reduction reduce_by_forced(const DominationState& state) {
    return make_reduction(state, state.d_basis(), true);
}

} // namespace eds
