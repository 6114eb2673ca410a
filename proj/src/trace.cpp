#include "eds/trace.hpp"

#include <sstream>

namespace eds {

void ReductionTrace::append_mapped(const ReductionTrace& other, const std::vector<int>& to_parent) {
    for (TraceEvent e : other.events) {
        if (e.vertex >= 0) e.vertex = to_parent[static_cast<std::size_t>(e.vertex)];
        for (int& v : e.set) v = to_parent[static_cast<std::size_t>(v)];
        events.push_back(std::move(e));
    }
}

std::string ReductionTrace::to_text() const {
    std::ostringstream out;
    for (const TraceEvent& e : events) {
        switch (e.kind) {
        case TraceEvent::Kind::Seeded:
            out << "seeded " << e.vertex << "\n";
            break;
        case TraceEvent::Kind::Forced:
            out << "forced " << e.vertex << " " << e.rule << "\n";
            break;
        case TraceEvent::Kind::Excluded:
            out << "excluded " << e.vertex << " " << e.rule << "\n";
            break;
        case TraceEvent::Kind::Reduced: {
            out << "reduced";
            for (int v : e.set) out << " " << v;
            out << "\n";
            break;
        }
        case TraceEvent::Kind::Branched:
            out << "branched " << e.choice << "\n";
            break;
        case TraceEvent::Kind::Infeasible:
            out << "infeasible " << e.rule << "\n";
            break;
        }
    }
    return out.str();
}

} // namespace eds
