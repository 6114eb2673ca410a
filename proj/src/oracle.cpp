#include "eds/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

#include "eds/errors.hpp"

namespace eds {

namespace {

// Dancing-links matrix (Knuth's Algorithm X) over vectors instead of raw
// pointers. Node 0..ncols-1 are column headers; header list head is `root`.
class Dlx {
public:
    explicit Dlx(int ncols) : ncols_(ncols) {
        int total = ncols + 1;
        left_.resize(static_cast<std::size_t>(total));
        right_.resize(static_cast<std::size_t>(total));
        up_.resize(static_cast<std::size_t>(total));
        down_.resize(static_cast<std::size_t>(total));
        col_.resize(static_cast<std::size_t>(total));
        row_.assign(static_cast<std::size_t>(total), -1);
        size_.assign(static_cast<std::size_t>(ncols), 0);
        root_ = ncols;
        for (int c = 0; c <= ncols; ++c) {
            left_[static_cast<std::size_t>(c)] = c == 0 ? root_ : c - 1;
            right_[static_cast<std::size_t>(c)] = c == ncols ? (ncols == 0 ? root_ : 0) : c + 1;
            up_[static_cast<std::size_t>(c)] = c;
            down_[static_cast<std::size_t>(c)] = c;
            col_[static_cast<std::size_t>(c)] = c;
        }
        if (ncols == 0) left_[static_cast<std::size_t>(root_)] = root_;
    }

    void add_row(int row_id, const std::vector<int>& cols) {
        int first = -1, prev = -1;
        for (int c : cols) {
            int nd = static_cast<int>(left_.size());
            left_.push_back(nd);
            right_.push_back(nd);
            up_.push_back(up_[static_cast<std::size_t>(c)]);
            down_.push_back(c);
            col_.push_back(c);
            row_.push_back(row_id);
            down_[static_cast<std::size_t>(up_[static_cast<std::size_t>(c)])] = nd;
            up_[static_cast<std::size_t>(c)] = nd;
            ++size_[static_cast<std::size_t>(c)];
            if (first < 0) {
                first = nd;
            } else {
                left_[static_cast<std::size_t>(nd)] = prev;
                right_[static_cast<std::size_t>(prev)] = nd;
                left_[static_cast<std::size_t>(first)] = nd;
                right_[static_cast<std::size_t>(nd)] = first;
            }
            prev = nd;
        }
        if (first >= 0) row_nodes_.push_back(first);
    }

    // Pre-selects the row whose id is `row_id` (first node stored in order of
    // add_row calls). Returns false when one of its columns is already
    // covered, i.e. the pre-selection conflicts.
    bool preselect(int idx) {
        int nd = row_nodes_[static_cast<std::size_t>(idx)];
        // Check all columns of the row are still active.
        int it = nd;
        do {
            int c = col_[static_cast<std::size_t>(it)];
            if (!column_active(c)) return false;
            if (!node_active(it)) return false;
            it = right_[static_cast<std::size_t>(it)];
        } while (it != nd);
        it = nd;
        do {
            cover(col_[static_cast<std::size_t>(it)]);
            it = right_[static_cast<std::size_t>(it)];
        } while (it != nd);
        return true;
    }

    void remove_row(int idx) {
        int nd = row_nodes_[static_cast<std::size_t>(idx)];
        int it = nd;
        do {
            up_[static_cast<std::size_t>(down_[static_cast<std::size_t>(it)])] = up_[static_cast<std::size_t>(it)];
            down_[static_cast<std::size_t>(up_[static_cast<std::size_t>(it)])] = down_[static_cast<std::size_t>(it)];
            --size_[static_cast<std::size_t>(col_[static_cast<std::size_t>(it)])];
            it = right_[static_cast<std::size_t>(it)];
        } while (it != nd);
    }

    // Enumerates exact covers; on_solution receives selected row ids (of the
    // search part only, not preselected ones) and returns false to stop.
    // Throws BudgetError when node_budget attempts are exhausted.
    void search(std::uint64_t node_budget, const std::function<bool(const std::vector<int>&)>& on_solution) {
        nodes_ = 0;
        budget_ = node_budget;
        stack_.clear();
        stopped_ = false;
        recurse(on_solution);
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    bool column_active(int c) const {
        for (int it = right_[static_cast<std::size_t>(root_)]; it != root_; it = right_[static_cast<std::size_t>(it)])
            if (it == c) return true;
        return false;
    }

    bool node_active(int nd) const {
        return down_[static_cast<std::size_t>(up_[static_cast<std::size_t>(nd)])] == nd;
    }

    void cover(int c) {
        left_[static_cast<std::size_t>(right_[static_cast<std::size_t>(c)])] = left_[static_cast<std::size_t>(c)];
        right_[static_cast<std::size_t>(left_[static_cast<std::size_t>(c)])] = right_[static_cast<std::size_t>(c)];
        for (int i = down_[static_cast<std::size_t>(c)]; i != c; i = down_[static_cast<std::size_t>(i)]) {
            for (int j = right_[static_cast<std::size_t>(i)]; j != i; j = right_[static_cast<std::size_t>(j)]) {
                up_[static_cast<std::size_t>(down_[static_cast<std::size_t>(j)])] = up_[static_cast<std::size_t>(j)];
                down_[static_cast<std::size_t>(up_[static_cast<std::size_t>(j)])] = down_[static_cast<std::size_t>(j)];
                --size_[static_cast<std::size_t>(col_[static_cast<std::size_t>(j)])];
            }
        }
    }

    void uncover(int c) {
        for (int i = up_[static_cast<std::size_t>(c)]; i != c; i = up_[static_cast<std::size_t>(i)]) {
            for (int j = left_[static_cast<std::size_t>(i)]; j != i; j = left_[static_cast<std::size_t>(j)]) {
                ++size_[static_cast<std::size_t>(col_[static_cast<std::size_t>(j)])];
                up_[static_cast<std::size_t>(down_[static_cast<std::size_t>(j)])] = j;
                down_[static_cast<std::size_t>(up_[static_cast<std::size_t>(j)])] = j;
            }
        }
        left_[static_cast<std::size_t>(right_[static_cast<std::size_t>(c)])] = c;
        right_[static_cast<std::size_t>(left_[static_cast<std::size_t>(c)])] = c;
    }

    void recurse(const std::function<bool(const std::vector<int>&)>& on_solution) {
        if (stopped_) return;
        int head = right_[static_cast<std::size_t>(root_)];
        if (head == root_) {
            if (!on_solution(stack_)) stopped_ = true;
            return;
        }
        // Fewest candidates first; ties broken by smallest column id (header
        // ids equal column ids, and the header ring preserves id order only
        // partially, so scan for the minimum explicitly).
        int best = head;
        for (int c = head; c != root_; c = right_[static_cast<std::size_t>(c)]) {
            if (size_[static_cast<std::size_t>(c)] < size_[static_cast<std::size_t>(best)] ||
                (size_[static_cast<std::size_t>(c)] == size_[static_cast<std::size_t>(best)] && c < best))
                best = c;
        }
        if (size_[static_cast<std::size_t>(best)] == 0) return;
        // Deterministic row order: rows were linked in id order, so walking
        // down from the header visits ascending row ids.
        cover(best);
        for (int i = down_[static_cast<std::size_t>(best)]; i != best; i = down_[static_cast<std::size_t>(i)]) {
            if (++nodes_ > budget_)
                throw BudgetError("exact-cover node budget exceeded", nodes_);
            stack_.push_back(row_[static_cast<std::size_t>(i)]);
            for (int j = right_[static_cast<std::size_t>(i)]; j != i; j = right_[static_cast<std::size_t>(j)])
                cover(col_[static_cast<std::size_t>(j)]);
            recurse(on_solution);
            for (int j = left_[static_cast<std::size_t>(i)]; j != i; j = left_[static_cast<std::size_t>(j)])
                uncover(col_[static_cast<std::size_t>(j)]);
            stack_.pop_back();
            if (stopped_) break;
        }
        uncover(best);
    }

    int ncols_;
    int root_;
    std::vector<int> left_, right_, up_, down_, col_, row_;
    std::vector<int> size_;
    std::vector<int> row_nodes_; // first node of each added row
    std::vector<int> stack_;
    std::uint64_t nodes_ = 0;
    std::uint64_t budget_ = 0;
    bool stopped_ = false;
};

} // namespace

std::optional<EdsViolation> verify_eds(const BipartiteGraph& g, const VertexSet& d) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        int cnt = d.contains(v) ? 1 : 0;
        for (int w : g.neighbors(v))
            if (d.contains(w)) ++cnt;
        if (cnt != 1) return EdsViolation{v, cnt};
    }
    return std::nullopt;
}

OracleResult solve_exact_constrained(const BipartiteGraph& g, OracleMode mode,
                                     const VertexSet& assumed, const VertexSet& excluded,
                                     const OracleOptions& opt) {
    const int n = g.vertex_count();
    Dlx dlx(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> cols = g.closed_neighborhood(v).to_vector();
        dlx.add_row(v, cols);
    }
    OracleResult res;
    excluded.for_each([&](int v) {
        if (!assumed.contains(v)) dlx.remove_row(v);
    });
    bool conflict = false;
    assumed.for_each([&](int v) {
        if (conflict) return;
        if (excluded.contains(v) || !dlx.preselect(v)) conflict = true;
    });
    if (conflict) return res;

    auto emit = [&](const std::vector<int>& rows) {
        ++res.count;
        if (mode != OracleMode::Count) {
            VertexSet d(static_cast<std::size_t>(n));
            assumed.for_each([&](int v) { d.insert(v); });
            for (int r : rows) d.insert(r);
            EdsSolution sol;
            sol.certified = !verify_eds(g, d).has_value();
            sol.d = std::move(d);
            res.solutions.push_back(std::move(sol));
        }
        return mode != OracleMode::First;
    };
    dlx.search(opt.node_budget, emit);
    res.nodes = dlx.nodes();
    return res;
}

OracleResult solve_exact(const BipartiteGraph& g, OracleMode mode, const OracleOptions& opt) {
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    return solve_exact_constrained(g, mode, VertexSet(n), VertexSet(n), opt);
}

ForcedExcluded forced_excluded_by_oracle(const BipartiteGraph& g, const VertexSet& assumed,
                                         const OracleOptions& opt) {
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    ForcedExcluded fe;
    fe.forced = VertexSet(n);
    fe.excluded = VertexSet(n);
    VertexSet inter = VertexSet(n);
    VertexSet uni = VertexSet(n);
    bool any = false;
    Dlx dlx(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) dlx.add_row(v, g.closed_neighborhood(v).to_vector());
    bool conflict = false;
    assumed.for_each([&](int v) {
        if (!conflict && !dlx.preselect(v)) conflict = true;
    });
    if (!conflict) {
        dlx.search(opt.node_budget, [&](const std::vector<int>& rows) {
            VertexSet d(n);
            assumed.for_each([&](int v) { d.insert(v); });
            for (int r : rows) d.insert(r);
            ++fe.eds_count;
            if (!any) {
                inter = d;
                uni = d;
                any = true;
            } else {
                inter &= d;
                uni |= d;
            }
            return true;
        });
    }
    if (!any) {
        // Vacuous pair, flagged infeasible: everything forced and excluded.
        fe.infeasible = true;
        for (int v = 0; v < g.vertex_count(); ++v) {
            fe.forced.insert(v);
            fe.excluded.insert(v);
        }
        return fe;
    }
    fe.forced = inter;
    VertexSet all(n);
    for (int v = 0; v < g.vertex_count(); ++v) all.insert(v);
    fe.excluded = all - uni;
    return fe;
}

std::string format_solution(const VertexSet& d) {
    std::ostringstream out;
    out << "eds " << d.count() << " :";
    d.for_each([&](int v) { out << " " << v; });
    return out.str();
}

std::string format_no_eds() { return "no-eds"; }

std::string format_budget_exceeded(std::uint64_t nodes) {
    return "budget-exceeded " + std::to_string(nodes);
}

VertexSet parse_solution_line(const std::string& line, std::size_t universe) {
    std::istringstream ss(line);
    std::string tag, colon;
    std::size_t k = 0;
    if (!(ss >> tag >> k >> colon) || tag != "eds" || colon != ":")
        throw EdsError(Errc::FormatError, "expected 'eds <k> : <ids>'");
    VertexSet d(universe);
    long long v;
    std::size_t got = 0;
    while (ss >> v) {
        if (v < 0 || static_cast<std::size_t>(v) >= universe)
            throw EdsError(Errc::FormatError, "solution vertex out of range");
        d.insert(static_cast<int>(v));
        ++got;
    }
    if (got != k || d.count() != k)
        throw EdsError(Errc::FormatError, "solution cardinality mismatch");
    return d;
}

} // namespace eds
