#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "eds/graph.hpp"
#include "eds/vertex_set.hpp"

namespace eds {

struct StressConfig {
    int instance_count = 100;
    int size_min = 4;
    int size_max = 14;
    std::uint64_t oracle_budget = 10'000'000;
    std::uint64_t solver_budget = 100'000;
    std::uint64_t seed = 1;
    double edge_prob = 0.12;
    double planted_ratio = 0.5;
    bool run_lemmas = true;
    bool include_corpus = true;
    int threads = 0; // 0 = hardware concurrency
};

// key = value lines, '#' comments; unknown keys are errors.
StressConfig parse_stress_config(std::istream& in);
StressConfig parse_stress_config_file(const std::string& path);

struct StressReport {
    int instances = 0;
    int in_class = 0;
    int eds_found = 0;
    int no_eds = 0;
    int decision_matches = 0;
    int decision_mismatches = 0;
    int budget_exceeded = 0;
    int lemma_violations = 0;
    std::vector<std::string> failures;
    std::uint64_t solver_p50_us = 0, solver_p90_us = 0, solver_p99_us = 0;
    std::uint64_t oracle_p50_us = 0, oracle_p90_us = 0, oracle_p99_us = 0;

    bool ok() const { return decision_mismatches == 0 && lemma_violations == 0; }
    std::string to_text() const; // key=value lines plus a JSON summary block
};

// Oracle-vs-solver equivalence pipeline over generated instances (plus the
// corpus): classify, both deciders, decision comparison, lemma suite over
// every oracle e.d.s. Budget-exceeded instances are counted separately and
// excluded from the comparison.
StressReport stress(const StressConfig& cfg);

// Basis pairings exercised by the lemma suite for an e.d.s. `d`: the empty
// basis, every singleton, every pair, and the P5-midpoint triples
// (midpoint plus the dominators of its P5 endpoints).
std::vector<VertexSet> basis_pairings(const BipartiteGraph& g, const VertexSet& d);

} // namespace eds
