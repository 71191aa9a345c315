#include "ramsey/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

#include "ramsey/canonical.hpp"
#include "ramsey/graph6.hpp"

namespace ramsey {

namespace {

/// graph6 strings sorted by vertex count first (encoding length), then
/// bytewise; this is the canonical emission order.
void sort_level(std::vector<std::string>& level) {
    std::sort(level.begin(), level.end(), [](const std::string& a, const std::string& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
}

/// Children of one parent: one new edge between existing vertices, an edge
/// to one new vertex, or a fresh K2 component. Every (q+1)-edge graph with
/// no isolated vertices arises this way from some q-edge one.
void augment(const Graph& parent, int vertex_cap, int degree_floor,
             std::unordered_set<std::string>& seen, std::vector<std::string>& out) {
    const int n = parent.order();
    auto offer = [&](const Graph& child) {
        if (degree_floor > 0 && child.max_degree() < degree_floor) return;
        std::string form = canonical_form(child);
        if (seen.insert(form).second) out.push_back(std::move(form));
    };
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (parent.adjacent(u, v)) continue;
            Graph child = parent;
            child.add_edge(u, v);
            offer(child);
        }
    }
    if (n + 1 <= vertex_cap) {
        for (int u = 0; u < n; ++u) {
            Graph child = parent;
            int w = child.add_vertex();
            child.add_edge(u, w);
            offer(child);
        }
    }
    if (n + 2 <= vertex_cap) {
        Graph child = parent;
        int a = child.add_vertex();
        int b = child.add_vertex();
        child.add_edge(a, b);
        offer(child);
    }
}

Graph single_edge() {
    Graph g(2);
    g.add_edge(0, 1);
    return g;
}

std::vector<std::string> generate_levels(int q, int vertex_cap, int target_min_degree) {
    std::vector<std::string> level{canonical_form(single_edge())};
    for (int k = 2; k <= q; ++k) {
        std::unordered_set<std::string> seen;
        std::vector<std::string> next;
        // Removing an edge lowers the maximum degree by at most one, so a
        // parent too far below the degree floor cannot reach it by level q.
        const int floor_here =
            target_min_degree > 0 ? std::max(0, target_min_degree - (q - k)) : 0;
        for (const std::string& s : level)
            augment(parse_graph6(s), vertex_cap, floor_here, seen, next);
        sort_level(next);
        level = std::move(next);
    }
    return level;
}

}  // namespace

std::vector<Graph> graphs_with_edges(const EnumerationTask& task) {
    if (task.edge_count < 1) throw InvalidParameter("edge count must be >= 1");
    if (task.edge_count > task.budget)
        throw BudgetExceeded("enumeration budget is " + std::to_string(task.budget) +
                             " edges, requested " + std::to_string(task.edge_count));
    int cap = task.max_vertices > 0 ? task.max_vertices
                                    : std::min(2 * task.edge_count, kMaxVertices);
    cap = std::min(cap, kMaxVertices);

    auto level = generate_levels(task.edge_count, cap, task.min_max_degree);
    std::vector<Graph> out;
    out.reserve(level.size());
    for (const std::string& s : level) {
        Graph g = parse_graph6(s);
        if (task.min_max_degree > 0 && g.max_degree() < task.min_max_degree) continue;
        if (task.connected_only && !g.connected()) continue;
        out.push_back(std::move(g));
    }
    return out;
}

std::uint64_t count_with_edges(const EnumerationTask& task) {
    return graphs_with_edges(task).size();
}

const std::vector<std::string>& Enumerator::level(int q) {
    if (q < 1) throw InvalidParameter("edge count must be >= 1");
    if (q > budget_)
        throw BudgetExceeded("enumeration budget is " + std::to_string(budget_) +
                             " edges, requested " + std::to_string(q));
    if (static_cast<int>(levels_.size()) < q) {
        const int have = static_cast<int>(levels_.size());
        levels_.resize(q);
        if (have == 0) levels_[0] = {canonical_form(single_edge())};
        for (int k = std::max(have, 1) + 1; k <= q; ++k) {
            std::unordered_set<std::string> seen;
            std::vector<std::string> next;
            const int cap = std::min(2 * k, kMaxVertices);
            for (const std::string& s : levels_[k - 2])
                augment(parse_graph6(s), cap, 0, seen, next);
            sort_level(next);
            levels_[k - 1] = std::move(next);
        }
    }
    return levels_[q - 1];
}

}  // namespace ramsey
