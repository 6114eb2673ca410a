#include "eds/solver.hpp"

#include <algorithm>
#include <string>

#include "eds/errors.hpp"
#include "eds/lemmas.hpp"

namespace eds {

namespace {

struct Ctx {
    const SolveOptions& opts;
    std::uint64_t branches = 0;

    void count_branch() {
        if (++branches > opts.branch_budget)
            throw BudgetError("solver branch budget exceeded", branches);
    }
};

struct Result {
    bool found = false;
    VertexSet eds;
    ReductionTrace trace;
    BaseCase base = BaseCase::Direct;
};

BaseCase worse(BaseCase a, BaseCase b) { return static_cast<int>(a) >= static_cast<int>(b) ? a : b; }

Result solve_graph(const BipartiteGraph& g, const VertexSet& excluded, Ctx& ctx);

// Reduce a saturated feasible state and recurse on the residual; lifts and
// certifies the child solution against this component.
Result descend(const BipartiteGraph& g, const DominationState& st, Ctx& ctx) {
    Result res;
    Reduction red = reduce_by_forced(st);
    res.trace = st.trace();
    VertexSet removed = g.vertices();
    for (int v : red.to_parent) removed.erase(v);
    res.trace.reduced(removed.to_vector());
    Result child = solve_graph(red.child, red.child_excluded, ctx);
    if (!child.found) {
        res.trace.append_mapped(child.trace, red.to_parent);
        res.base = worse(BaseCase::NoP8Residual, child.base);
        return res;
    }
    VertexSet d = st.d_basis();
    child.eds.for_each([&](int cv) { d.insert(red.to_parent[static_cast<std::size_t>(cv)]); });
    if (verify_eds(g, d)) {
        // Lifting can only fail off-class; the branch just dies.
        res.trace.infeasible("certify");
        res.base = BaseCase::NoP8Residual;
        return res;
    }
    res.found = true;
    res.eds = std::move(d);
    res.trace.append_mapped(child.trace, red.to_parent);
    res.base = worse(BaseCase::NoP8Residual, child.base);
    return res;
}

Result solved_by(const DominationState& st) {
    Result res;
    res.found = true;
    res.eds = st.d_basis();
    res.trace = st.trace();
    res.base = BaseCase::Direct;
    return res;
}

// One connected component with pre-excluded vertices.
Result solve_component(const BipartiteGraph& g, const VertexSet& excluded, Ctx& ctx) {
    ctx.count_branch();
    const int n = g.vertex_count();
    Result res;
    res.eds = VertexSet(static_cast<std::size_t>(n));

    // Single vertex and the |D|=1 screen (a vertex joining everything else).
    for (int x = 0; x < n; ++x) {
        if (excluded.contains(x)) continue;
        if (g.degree(x) == n - 1) {
            res.found = true;
            res.eds.insert(x);
            res.trace.forced(x, "R-unit");
            return res;
        }
    }
    if (n == 1) {
        res.trace.infeasible("R-unit"); // the lone vertex is pre-excluded
        return res;
    }

    DominationState st0(g);
    excluded.for_each([&](int v) { st0.exclude(v, "R-levels"); });

    PropagateOptions sound_opts;
    DominationState st_sound = propagate(std::move(st0), sound_opts);
    if (!st_sound.feasible()) {
        res.trace = st_sound.trace();
        return res;
    }
    if (st_sound.fully_determined()) return solved_by(st_sound);

    // Case branch: assume no D-vertex is a P5 midpoint and run the P8 rule.
    PropagateOptions p8_opts;
    p8_opts.enable_p8 = true;
    DominationState st_assume = st_sound;
    st_assume.trace().branched("no-p5-midpoints");
    st_assume = propagate(std::move(st_assume), p8_opts);
    if (st_assume.feasible() && st_assume.fully_determined()) {
        if (!verify_eds(g, st_assume.d_basis())) return solved_by(st_assume);
    }

    // P8-free components go straight to the exact-cover engine, seeded with
    // the sound marks.
    if (!find_induced_path(g, 8)) {
        VertexSet excl(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            if (st_sound.status(v) == VertexStatus::Excluded) excl.insert(v);
        res.trace = st_sound.trace();
        res.trace.branched("oracle-fallback");
        res.base = BaseCase::OracleFallback;
        OracleResult orc =
            solve_exact_constrained(g, OracleMode::First, st_sound.d_basis(), excl, ctx.opts.oracle);
        if (orc.has_eds()) {
            res.found = true;
            res.eds = orc.solutions.front().d;
            res.eds.for_each([&](int v) {
                if (!st_sound.d_basis().contains(v)) res.trace.forced(v, "oracle");
            });
        }
        return res;
    }

    // Branch A: the no-midpoint case, reduced and recursed.
    bool assume_differs = false;
    if (st_assume.feasible()) {
        for (int v = 0; v < n && !assume_differs; ++v)
            if (st_assume.status(v) != st_sound.status(v)) assume_differs = true;
        if (!st_assume.d_basis().empty()) {
            ctx.count_branch();
            Result a = descend(g, st_assume, ctx);
            if (a.found) return a;
            res.base = worse(res.base, a.base);
        }
    }

    // Branch B0: commit the sound forcings alone (covers solutions extending
    // them when the case assumption above was wrong).
    if (!st_sound.d_basis().empty() && (assume_differs || !st_assume.feasible())) {
        ctx.count_branch();
        DominationState stb = st_sound;
        stb.trace().branched("sound-basis");
        Result b = descend(g, stb, ctx);
        if (b.found) return b;
        res.base = worse(res.base, b.base);
    }

    // Branch B: one branch per potential P5-midpoint D-vertex.
    VertexSet mids = p5_midpoints(g);
    for (int r0 : mids.to_vector()) {
        if (st_sound.status(r0) != VertexStatus::Open) continue;
        ctx.count_branch();
        DominationState stb = st_sound;
        stb.trace().branched("p5-midpoint " + std::to_string(r0));
        stb.seed(r0);
        stb = propagate(std::move(stb), p8_opts);
        if (!stb.feasible()) {
            res.base = worse(res.base, BaseCase::NoP8Residual);
            continue;
        }
        if (ctx.opts.use_pruners) {
            std::string failed = first_failed_pruner(g, stb.d_basis());
            if (!failed.empty()) {
                stb.mark_infeasible(failed);
                res.base = worse(res.base, BaseCase::NoP8Residual);
                continue;
            }
        }
        if (stb.fully_determined()) {
            Result b = solved_by(stb);
            b.base = BaseCase::NoP8Residual;
            return b;
        }
        Result b = descend(g, stb, ctx);
        if (b.found) return b;
        res.base = worse(res.base, b.base);
    }

    res.base = worse(res.base, BaseCase::NoP8Residual);
    return res;
}

Result solve_graph(const BipartiteGraph& g, const VertexSet& excluded, Ctx& ctx) {
    Result res;
    res.found = true;
    res.eds = VertexSet(static_cast<std::size_t>(g.vertex_count()));
    for (const VertexSet& comp : g.components()) {
        auto ind = g.induced_subgraph(comp);
        VertexSet cex(ind.to_parent.size());
        for (std::size_t i = 0; i < ind.to_parent.size(); ++i)
            if (excluded.contains(ind.to_parent[i])) cex.insert(static_cast<int>(i));
        Result cr = solve_component(ind.graph, cex, ctx);
        res.trace.append_mapped(cr.trace, ind.to_parent);
        res.base = worse(res.base, cr.base);
        if (!cr.found) {
            res.found = false;
            res.eds = VertexSet(static_cast<std::size_t>(g.vertex_count()));
            return res;
        }
        cr.eds.for_each([&](int cv) { res.eds.insert(ind.to_parent[static_cast<std::size_t>(cv)]); });
    }
    return res;
}

} // namespace

SolveOutcome solve(const BipartiteGraph& g, const SolveOptions& opts) {
    if (!opts.force) {
        ClassReport rep = classify(g, opts.classify_opts);
        if (!rep.in_class()) {
            std::string why = "graph is outside the target class:";
            if (!rep.is_chordal_bipartite) why += " " + rep.hole_witness->to_line();
            if (!rep.s125_free) why += " " + rep.s125_witness->to_line();
            if (!rep.s333_free) why += " " + rep.s333_witness->to_line();
            throw EdsError(Errc::NotInClass, why);
        }
    }
    Ctx ctx{opts, 0};
    Result r = solve_graph(g, VertexSet(static_cast<std::size_t>(g.vertex_count())), ctx);
    SolveOutcome out;
    out.found = r.found;
    out.eds = r.found ? r.eds : VertexSet(static_cast<std::size_t>(g.vertex_count()));
    out.trace = std::move(r.trace);
    out.base_case = r.base;
    out.final_status.assign(static_cast<std::size_t>(g.vertex_count()), VertexStatus::Open);
    if (r.found) {
        if (verify_eds(g, out.eds))
            throw EdsError(Errc::NotAnEds, "internal: solve produced an uncertified set");
        for (int v = 0; v < g.vertex_count(); ++v)
            out.final_status[static_cast<std::size_t>(v)] =
                out.eds.contains(v) ? VertexStatus::InD : VertexStatus::Excluded;
    }
    return out;
}

} // namespace eds
