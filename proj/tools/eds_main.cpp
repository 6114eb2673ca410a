// eds: efficient dominating set toolkit for bipartite graphs.
//
// Exit codes: 0 ok / EDS found, 1 no EDS (or failed stress/lemma run),
// 2 not in class, 3 budget exceeded, 4 I/O or format error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "eds/errors.hpp"
#include "eds/generator.hpp"
#include "eds/graph_io.hpp"
#include "eds/lemmas.hpp"
#include "eds/oracle.hpp"
#include "eds/recognition.hpp"
#include "eds/solver.hpp"
#include "eds/stress.hpp"

namespace {

constexpr int kExitEds = 0;
constexpr int kExitNoEds = 1;
constexpr int kExitNotInClass = 2;
constexpr int kExitBudget = 3;
constexpr int kExitIo = 4;

int map_error(const eds::EdsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
    case eds::Errc::NotInClass: return kExitNotInClass;
    case eds::Errc::BudgetExceeded: return kExitBudget;
    default: return kExitIo;
    }
}

int cmd_recognize(const std::string& file) {
    eds::BipartiteGraph g = eds::parse_graph_file(file);
    eds::ClassReport rep = eds::classify(g);
    std::cout << "is_bipartite=" << (rep.is_bipartite ? 1 : 0) << "\n";
    std::cout << "is_chordal_bipartite=" << (rep.is_chordal_bipartite ? 1 : 0) << "\n";
    std::cout << "s125_free=" << (rep.s125_free ? 1 : 0) << "\n";
    std::cout << "s333_free=" << (rep.s333_free ? 1 : 0) << "\n";
    if (rep.hole_witness) std::cout << "witness " << rep.hole_witness->to_line() << "\n";
    if (rep.s125_witness) std::cout << "witness " << rep.s125_witness->to_line() << "\n";
    if (rep.s333_witness) std::cout << "witness " << rep.s333_witness->to_line() << "\n";
    return rep.in_class() ? kExitEds : kExitNotInClass;
}

int cmd_solve(const std::string& file, bool force, const std::string& trace_out,
              std::uint64_t branch_budget) {
    eds::BipartiteGraph g = eds::parse_graph_file(file);
    eds::SolveOptions opts;
    opts.force = force;
    opts.branch_budget = branch_budget;
    eds::SolveOutcome out = eds::solve(g, opts);
    if (!trace_out.empty()) {
        std::ofstream tf(trace_out, std::ios::binary);
        if (!tf) throw eds::EdsError(eds::Errc::FormatError, "cannot write " + trace_out);
        tf << out.trace.to_text();
    }
    if (out.found) {
        std::cout << eds::format_solution(out.eds) << "\n";
        return kExitEds;
    }
    std::cout << eds::format_no_eds() << "\n";
    return kExitNoEds;
}

int cmd_oracle(const std::string& file, bool all, bool count, std::uint64_t budget) {
    eds::BipartiteGraph g = eds::parse_graph_file(file);
    eds::OracleOptions opts;
    opts.node_budget = budget;
    eds::OracleMode mode =
        count ? eds::OracleMode::Count : (all ? eds::OracleMode::All : eds::OracleMode::First);
    try {
        eds::OracleResult res = eds::solve_exact(g, mode, opts);
        if (mode == eds::OracleMode::Count) {
            std::cout << "count " << res.count << "\n";
        } else if (res.solutions.empty()) {
            std::cout << eds::format_no_eds() << "\n";
        } else {
            for (const auto& sol : res.solutions) std::cout << eds::format_solution(sol.d) << "\n";
        }
        return res.has_eds() ? kExitEds : kExitNoEds;
    } catch (const eds::BudgetError& b) {
        std::cout << eds::format_budget_exceeded(b.nodes()) << "\n";
        return kExitBudget;
    }
}

int cmd_gen(int n, std::uint64_t seed, const std::string& mode, double edge_prob, int max_retries,
            const std::string& out_file) {
    eds::GenSpec spec;
    spec.n = n;
    spec.seed = seed;
    spec.edge_prob = edge_prob;
    spec.max_retries = max_retries;
    if (mode == "planted") spec.mode = eds::GenMode::PlantedEds;
    else if (mode == "rejection") spec.mode = eds::GenMode::Rejection;
    else throw eds::EdsError(eds::Errc::FormatError, "gen mode must be planted or rejection");
    eds::GenResult res = eds::gen_in_class(spec);
    if (out_file.empty() || out_file == "-") std::cout << eds::format_graph(res.graph);
    else eds::write_graph_file(res.graph, out_file);
    if (!res.planted.empty())
        std::cerr << "# planted " << eds::format_solution(res.planted) << "\n";
    return kExitEds;
}

int cmd_stress(const std::string& config_file) {
    eds::StressConfig cfg = eds::parse_stress_config_file(config_file);
    eds::StressReport rep = eds::stress(cfg);
    std::cout << rep.to_text();
    return rep.ok() ? kExitEds : kExitNoEds;
}

int cmd_lemmas(const std::string& graph_file, const std::string& eds_file,
               const std::string& basis_spec) {
    eds::BipartiteGraph g = eds::parse_graph_file(graph_file);
    std::ifstream ef(eds_file);
    if (!ef) throw eds::EdsError(eds::Errc::FormatError, "cannot open " + eds_file);
    std::string line;
    eds::VertexSet d(static_cast<std::size_t>(g.vertex_count()));
    bool got = false;
    while (std::getline(ef, line)) {
        if (line.empty() || line[0] == '#') continue;
        d = eds::parse_solution_line(line, static_cast<std::size_t>(g.vertex_count()));
        got = true;
        break;
    }
    if (!got) throw eds::EdsError(eds::Errc::FormatError, "no 'eds' line in " + eds_file);
    eds::VertexSet basis = d;
    if (!basis_spec.empty()) {
        basis = eds::VertexSet(static_cast<std::size_t>(g.vertex_count()));
        std::istringstream bs(basis_spec);
        std::string tok;
        while (std::getline(bs, tok, ',')) {
            int v = std::stoi(tok);
            if (v < 0 || v >= g.vertex_count())
                throw eds::EdsError(eds::Errc::FormatError, "basis vertex out of range");
            basis.insert(v);
        }
    }
    eds::LemmaReport rep = eds::check_lemmas(g, d, basis);
    std::cout << rep.to_text();
    std::cout << "violations=" << rep.violations() << "\n";
    return rep.violations() == 0 ? kExitEds : kExitNoEds;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"efficient dominating set toolkit for bipartite graphs"};
    app.require_subcommand(1);

    std::string file, trace_out, mode = "planted", out_file, config_file, eds_file, basis_spec;
    bool force = false, all = false, count = false;
    int n = 8, max_retries = 200;
    double edge_prob = 0.15;
    std::uint64_t seed = 1, oracle_budget = 10'000'000, branch_budget = 100'000;

    auto* rec = app.add_subcommand("recognize", "classify a graph file");
    rec->add_option("file", file)->required();

    auto* sol = app.add_subcommand("solve", "decide the e.d.s. problem structurally");
    sol->add_option("file", file)->required();
    sol->add_flag("--force", force, "skip the class gate");
    sol->add_option("--trace", trace_out, "write the reduction trace to a file");
    sol->add_option("--branch-budget", branch_budget);

    auto* orc = app.add_subcommand("oracle", "exact-cover oracle");
    orc->add_option("file", file)->required();
    orc->add_flag("--all", all, "enumerate all solutions");
    orc->add_flag("--count", count, "count solutions only");
    orc->add_option("--budget", oracle_budget, "search node budget");

    auto* gen = app.add_subcommand("gen", "generate an in-class instance");
    gen->add_option("--n", n)->required();
    gen->add_option("--seed", seed)->required();
    gen->add_option("--mode", mode, "planted or rejection");
    gen->add_option("--edge-prob", edge_prob);
    gen->add_option("--max-retries", max_retries);
    gen->add_option("-o,--out", out_file, "output file ('-' for stdout)");

    auto* str = app.add_subcommand("stress", "oracle-vs-solver stress pipeline");
    str->add_option("--config", config_file)->required();

    auto* lem = app.add_subcommand("lemmas", "lemma suite over a graph and an e.d.s. file");
    lem->add_option("graph", file)->required();
    lem->add_option("eds", eds_file)->required();
    lem->add_option("--basis", basis_spec, "comma-separated basis ids (default: the whole e.d.s.)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (rec->parsed()) return cmd_recognize(file);
        if (sol->parsed()) return cmd_solve(file, force, trace_out, branch_budget);
        if (orc->parsed()) return cmd_oracle(file, all, count, oracle_budget);
        if (gen->parsed()) return cmd_gen(n, seed, mode, edge_prob, max_retries, out_file);
        if (str->parsed()) return cmd_stress(config_file);
        if (lem->parsed()) return cmd_lemmas(file, eds_file, basis_spec);
    } catch (const eds::EdsError& e) {
        return map_error(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitIo;
}
