#pragma once

#include <string>
#include <vector>

namespace eds {

// Reduction/branching log. Replaying Seeded/Forced/Excluded events against
// the initial graph reproduces the final vertex marks deterministically.
struct TraceEvent {
    enum class Kind { Seeded, Forced, Excluded, Reduced, Branched, Infeasible };
    Kind kind;
    int vertex = -1;          // Seeded/Forced/Excluded
    std::vector<int> set;     // Reduced
    std::string rule;         // Forced/Excluded/Infeasible rule id
    std::string choice;       // Branched
};

struct ReductionTrace {
    std::vector<TraceEvent> events;

    void seeded(int v) { events.push_back({TraceEvent::Kind::Seeded, v, {}, {}, {}}); }
    void forced(int v, std::string rule) {
        events.push_back({TraceEvent::Kind::Forced, v, {}, std::move(rule), {}});
    }
    void excluded(int v, std::string rule) {
        events.push_back({TraceEvent::Kind::Excluded, v, {}, std::move(rule), {}});
    }
    void reduced(std::vector<int> removed) {
        events.push_back({TraceEvent::Kind::Reduced, -1, std::move(removed), {}, {}});
    }
    void branched(std::string choice) {
        events.push_back({TraceEvent::Kind::Branched, -1, {}, {}, std::move(choice)});
    }
    void infeasible(std::string rule) {
        events.push_back({TraceEvent::Kind::Infeasible, -1, {}, std::move(rule), {}});
    }

    void append(const ReductionTrace& other) {
        events.insert(events.end(), other.events.begin(), other.events.end());
    }

    // Appends `other` with vertex ids mapped through to_parent (child -> parent).
    void append_mapped(const ReductionTrace& other, const std::vector<int>& to_parent);

    std::string to_text() const;
};

} // namespace eds
