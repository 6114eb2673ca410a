#include "eds/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "eds/errors.hpp"

namespace eds {

namespace {

[[noreturn]] void fail(std::size_t lineno, const std::string& why) {
    throw EdsError(Errc::FormatError, "graph format error at line " + std::to_string(lineno) + ": " + why);
}

// Reads the next significant line (skipping comments and blank lines).
bool next_line(std::istream& in, std::string& line, std::size_t& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') continue;
        return true;
    }
    return false;
}

// Strict non-negative integer parse: no sign, no leading zeros except "0".
bool parse_uint(const std::string& tok, long long& out) {
    if (tok.empty() || tok.size() > 18) return false;
    if (tok.size() > 1 && tok[0] == '0') return false;
    long long v = 0;
    for (char c : tok) {
        if (c < '0' || c > '9') return false;
        v = v * 10 + (c - '0');
    }
    out = v;
    return true;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

} // namespace

BipartiteGraph parse_graph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;

    if (!next_line(in, line, lineno)) fail(lineno, "missing header");
    if (line != "eds-graph 1") fail(lineno, "expected 'eds-graph 1'");

    if (!next_line(in, line, lineno)) fail(lineno, "missing 'n' line");
    auto toks = split_ws(line);
    long long n = 0;
    if (toks.size() != 2 || toks[0] != "n" || !parse_uint(toks[1], n))
        fail(lineno, "expected 'n <count>'");

    if (!next_line(in, line, lineno)) fail(lineno, "missing 'sides' line");
    toks = split_ws(line);
    if (toks.empty() || toks[0] != "sides" || toks.size() > 2 || (toks.size() == 1 && n != 0))
        fail(lineno, "expected 'sides <XY string>'");
    const std::string ss = toks.size() == 2 ? toks[1] : std::string{};
    if (static_cast<long long>(ss.size()) != n) fail(lineno, "sides length does not match n");
    std::vector<Side> sides;
    sides.reserve(ss.size());
    for (char c : ss) {
        if (c == 'X') sides.push_back(Side::X);
        else if (c == 'Y') sides.push_back(Side::Y);
        else fail(lineno, "sides characters must be X or Y");
    }

    std::vector<std::pair<int, int>> edges;
    std::pair<long long, long long> prev{-1, -1};
    while (next_line(in, line, lineno)) {
        toks = split_ws(line);
        long long u = 0, v = 0;
        if (toks.size() != 3 || toks[0] != "e" || !parse_uint(toks[1], u) || !parse_uint(toks[2], v))
            fail(lineno, "expected 'e <u> <v>'");
        if (u >= v) fail(lineno, "edge endpoints must satisfy u < v");
        if (v >= n) fail(lineno, "edge endpoint out of range");
        if (std::pair{u, v} <= prev) fail(lineno, "edges must be ascending lexicographic");
        prev = {u, v};
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }

    try {
        return BipartiteGraph::build(static_cast<std::size_t>(n), std::move(sides), edges);
    } catch (const EdsError& e) {
        throw EdsError(Errc::FormatError, std::string("graph format error: ") + e.what());
    }
}

BipartiteGraph parse_graph_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw EdsError(Errc::FormatError, "cannot open " + path);
    return parse_graph(f);
}

std::string format_graph(const BipartiteGraph& g) {
    std::ostringstream out;
    out << "eds-graph 1\n";
    out << "n " << g.vertex_count() << "\n";
    out << "sides ";
    for (int v = 0; v < g.vertex_count(); ++v) out << side_char(g.side(v));
    out << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    return out.str();
}

void write_graph_file(const BipartiteGraph& g, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw EdsError(Errc::FormatError, "cannot write " + path);
    f << format_graph(g);
}

} // namespace eds
