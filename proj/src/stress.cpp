#include "eds/stress.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "eds/errors.hpp"
#include "eds/generator.hpp"
#include "eds/lemmas.hpp"
#include "eds/oracle.hpp"
#include "eds/recognition.hpp"
#include "eds/rng.hpp"
#include "eds/solver.hpp"

namespace eds {

StressConfig parse_stress_config(std::istream& in) {
    StressConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t;
        for (char c : line) {
            if (c == '#') break;
            t += c;
        }
        std::istringstream ss(t);
        std::string key, eq, value;
        if (!(ss >> key)) continue;
        if (!(ss >> eq >> value) || eq != "=")
            throw EdsError(Errc::FormatError,
                           "stress config line " + std::to_string(lineno) + ": expected key = value");
        try {
            if (key == "instances") cfg.instance_count = std::stoi(value);
            else if (key == "size_min") cfg.size_min = std::stoi(value);
            else if (key == "size_max") cfg.size_max = std::stoi(value);
            else if (key == "oracle_budget") cfg.oracle_budget = std::stoull(value);
            else if (key == "solver_budget") cfg.solver_budget = std::stoull(value);
            else if (key == "seed") cfg.seed = std::stoull(value);
            else if (key == "edge_prob") cfg.edge_prob = std::stod(value);
            else if (key == "planted_ratio") cfg.planted_ratio = std::stod(value);
            else if (key == "run_lemmas") cfg.run_lemmas = value == "1" || value == "true";
            else if (key == "include_corpus") cfg.include_corpus = value == "1" || value == "true";
            else if (key == "threads") cfg.threads = std::stoi(value);
            else
                throw EdsError(Errc::FormatError, "stress config: unknown key '" + key + "'");
        } catch (const EdsError&) {
            throw;
        } catch (const std::exception&) {
            throw EdsError(Errc::FormatError, "stress config: bad value for '" + key + "'");
        }
    }
    if (cfg.size_max > 16)
        throw EdsError(Errc::FormatError, "stress config: size_max above the oracle-feasible cap 16");
    if (cfg.size_min < 1 || cfg.size_min > cfg.size_max)
        throw EdsError(Errc::FormatError, "stress config: bad size range");
    return cfg;
}

StressConfig parse_stress_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw EdsError(Errc::FormatError, "cannot open " + path);
    return parse_stress_config(f);
}

std::vector<VertexSet> basis_pairings(const BipartiteGraph& g, const VertexSet& d) {
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    std::vector<VertexSet> out;
    out.push_back(VertexSet(n));
    std::vector<int> dv = d.to_vector();
    for (int v : dv) {
        VertexSet s(n);
        s.insert(v);
        out.push_back(s);
    }
    for (std::size_t a = 0; a < dv.size(); ++a)
        for (std::size_t b = a + 1; b < dv.size(); ++b) {
            VertexSet s(n);
            s.insert(dv[a]);
            s.insert(dv[b]);
            out.push_back(s);
        }
    // P5-midpoint triples: midpoint plus the dominators of its P5 endpoints.
    std::vector<int> dom(n, -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (d.contains(v)) dom[static_cast<std::size_t>(v)] = v;
        for (int w : g.neighbors(v))
            if (d.contains(w)) dom[static_cast<std::size_t>(v)] = w;
    }
    for (int m : dv) {
        bool added = false;
        for_each_induced_path(g, 5, [&](const std::vector<int>& p) {
            if (p[2] != m) return true;
            int a = dom[static_cast<std::size_t>(p[0])], b = dom[static_cast<std::size_t>(p[4])];
            if (a < 0 || b < 0 || a == b) return true;
            VertexSet s(n);
            s.insert(m);
            s.insert(a);
            s.insert(b);
            out.push_back(s);
            added = true;
            return false;
        });
        if (added) continue;
    }
    return out;
}

namespace {

struct InstanceOutcome {
    bool in_class = false;
    bool budget_exceeded = false;
    int oracle_decision = -1; // 1 eds, 0 none, -1 unknown
    int solver_decision = -1;
    int lemma_violations = 0;
    std::uint64_t solver_us = 0;
    std::uint64_t oracle_us = 0;
    std::string failure;
};

InstanceOutcome run_instance(const BipartiteGraph& g, bool expect_in_class,
                             const StressConfig& cfg, const std::string& name) {
    InstanceOutcome o;
    ClassReport rep = classify(g);
    o.in_class = rep.in_class();
    if (!o.in_class) {
        if (expect_in_class) o.failure = name + ": expected in-class but classify failed";
        return o; // out-of-class instances are negative controls for classify only
    }
    using clock = std::chrono::steady_clock;

    OracleOptions oopt;
    oopt.node_budget = cfg.oracle_budget;
    OracleResult all;
    try {
        auto t0 = clock::now();
        all = solve_exact(g, OracleMode::All, oopt);
        o.oracle_us =
            static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::microseconds>(clock::now() - t0).count());
        o.oracle_decision = all.has_eds() ? 1 : 0;
    } catch (const BudgetError&) {
        o.budget_exceeded = true;
        return o;
    }

    SolveOptions sopt;
    sopt.branch_budget = cfg.solver_budget;
    sopt.oracle.node_budget = cfg.oracle_budget;
    try {
        auto t0 = clock::now();
        SolveOutcome out = solve(g, sopt);
        o.solver_us =
            static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::microseconds>(clock::now() - t0).count());
        o.solver_decision = out.found ? 1 : 0;
        if (out.found && verify_eds(g, out.eds))
            o.failure = name + ": solver returned an uncertified set";
    } catch (const BudgetError&) {
        o.budget_exceeded = true;
        return o;
    }
    if (o.failure.empty() && o.oracle_decision != o.solver_decision)
        o.failure = name + ": decision mismatch (oracle=" + std::to_string(o.oracle_decision) +
                    " solver=" + std::to_string(o.solver_decision) + ")";

    if (cfg.run_lemmas) {
        for (const EdsSolution& sol : all.solutions) {
            for (const VertexSet& basis : basis_pairings(g, sol.d)) {
                LemmaReport lr = check_lemmas(g, sol.d, basis, oopt);
                if (lr.violations() > 0) {
                    o.lemma_violations += lr.violations();
                    if (o.failure.empty()) {
                        for (const auto& e : lr.entries)
                            if (e.violated()) {
                                o.failure = name + ": lemma " + e.id + " violated: " + e.witness;
                                break;
                            }
                    }
                }
            }
        }
    }
    return o;
}

std::uint64_t percentile(std::vector<std::uint64_t>& xs, double p) {
    if (xs.empty()) return 0;
    std::sort(xs.begin(), xs.end());
    std::size_t idx = static_cast<std::size_t>(p * static_cast<double>(xs.size() - 1));
    return xs[idx];
}

} // namespace

StressReport stress(const StressConfig& cfg) {
    struct Job {
        BipartiteGraph g;
        bool expect_in_class;
        std::string name;
    };
    std::vector<Job> jobs;
    for (int i = 0; i < cfg.instance_count; ++i) {
        SplitMix64 pick(cfg.seed * 1000003ull + static_cast<std::uint64_t>(i));
        GenSpec spec;
        spec.n = cfg.size_min +
                 static_cast<int>(pick.below(static_cast<std::uint64_t>(cfg.size_max - cfg.size_min + 1)));
        spec.seed = pick.next();
        spec.edge_prob = cfg.edge_prob;
        spec.mode = pick.chance(cfg.planted_ratio) ? GenMode::PlantedEds : GenMode::Rejection;
        spec.max_retries = 400;
        GenResult gen = gen_in_class(spec);
        jobs.push_back({std::move(gen.graph), true, "gen" + std::to_string(i)});
    }
    if (cfg.include_corpus)
        for (NamedInstance& ni : corpus())
            jobs.push_back({std::move(ni.graph), ni.in_class, ni.name});

    std::vector<InstanceOutcome> outcomes(jobs.size());
    unsigned hw = std::thread::hardware_concurrency();
    int nthreads = cfg.threads > 0 ? cfg.threads : static_cast<int>(hw ? std::min(hw, 8u) : 1u);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            outcomes[i] = run_instance(jobs[i].g, jobs[i].expect_in_class, cfg, jobs[i].name);
        }
    };
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    StressReport rep;
    std::vector<std::uint64_t> sus, ous;
    for (const InstanceOutcome& o : outcomes) {
        ++rep.instances;
        if (o.in_class) ++rep.in_class;
        if (o.budget_exceeded) {
            ++rep.budget_exceeded;
            continue;
        }
        if (o.oracle_decision == 1) ++rep.eds_found;
        if (o.oracle_decision == 0) ++rep.no_eds;
        if (o.oracle_decision >= 0 && o.solver_decision >= 0) {
            if (o.oracle_decision == o.solver_decision) ++rep.decision_matches;
            else ++rep.decision_mismatches;
        }
        rep.lemma_violations += o.lemma_violations;
        if (!o.failure.empty()) rep.failures.push_back(o.failure);
        if (o.solver_us) sus.push_back(o.solver_us);
        if (o.oracle_us) ous.push_back(o.oracle_us);
    }
    rep.solver_p50_us = percentile(sus, 0.50);
    rep.solver_p90_us = percentile(sus, 0.90);
    rep.solver_p99_us = percentile(sus, 0.99);
    rep.oracle_p50_us = percentile(ous, 0.50);
    rep.oracle_p90_us = percentile(ous, 0.90);
    rep.oracle_p99_us = percentile(ous, 0.99);
    return rep;
}

std::string StressReport::to_text() const {
    std::ostringstream out;
    out << "instances=" << instances << "\n";
    out << "in_class=" << in_class << "\n";
    out << "eds_found=" << eds_found << "\n";
    out << "no_eds=" << no_eds << "\n";
    out << "decision_matches=" << decision_matches << "\n";
    out << "decision_mismatches=" << decision_mismatches << "\n";
    out << "budget_exceeded=" << budget_exceeded << "\n";
    out << "lemma_violations=" << lemma_violations << "\n";
    out << "solver_p50_us=" << solver_p50_us << "\n";
    out << "solver_p90_us=" << solver_p90_us << "\n";
    out << "solver_p99_us=" << solver_p99_us << "\n";
    out << "oracle_p50_us=" << oracle_p50_us << "\n";
    out << "oracle_p90_us=" << oracle_p90_us << "\n";
    out << "oracle_p99_us=" << oracle_p99_us << "\n";
    for (const std::string& f : failures) out << "failure " << f << "\n";
    nlohmann::json j{{"instances", instances},
                     {"in_class", in_class},
                     {"eds_found", eds_found},
                     {"no_eds", no_eds},
                     {"decision_matches", decision_matches},
                     {"decision_mismatches", decision_mismatches},
                     {"budget_exceeded", budget_exceeded},
                     {"lemma_violations", lemma_violations},
                     {"solver_p50_us", solver_p50_us},
                     {"oracle_p50_us", oracle_p50_us},
                     {"ok", ok()}};
    out << "summary " << j.dump() << "\n";
    return out.str();
}

} // namespace eds
