#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "ramsey/canonical.hpp"
#include "ramsey/enumerate.hpp"
#include "ramsey/graph6.hpp"

using namespace ramsey;

TEST_CASE("class counts match the labeled-graph oracle") {
    for (int q = 1; q <= 5; ++q) {
        EnumerationTask task;
        task.edge_count = q;
        CHECK(count_with_edges(task) == oracles::count_classes_bruteforce(q));
    }
}

TEST_CASE("levels contain no duplicates and no isolated vertices") {
    Enumerator e(7);
    for (int q = 1; q <= 7; ++q) {
        const auto& level = e.level(q);
        std::set<std::string> forms;
        for (const std::string& s : level) {
            Graph g = parse_graph6(s);
            CHECK(g.size() == q);
            CHECK_FALSE(g.has_isolated_vertex());
            CHECK(canonical_form(g) == s);  // stored graphs are canonical
            forms.insert(s);
        }
        CHECK(forms.size() == level.size());
        CHECK(std::is_sorted(level.begin(), level.end(), [](const auto& a, const auto& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        }));
    }
}

TEST_CASE("connectivity and degree filters") {
    EnumerationTask task;
    task.edge_count = 5;
    task.connected_only = true;
    const auto connected = graphs_with_edges(task);
    for (const Graph& g : connected) CHECK(g.connected());

    EnumerationTask all;
    all.edge_count = 5;
    std::size_t connected_count = 0;
    for (const Graph& g : graphs_with_edges(all))
        if (g.connected()) ++connected_count;
    CHECK(connected.size() == connected_count);

    EnumerationTask degree;
    degree.edge_count = 6;
    degree.min_max_degree = 4;
    const auto high = graphs_with_edges(degree);
    for (const Graph& g : high) CHECK(g.max_degree() >= 4);
    std::size_t high_count = 0;
    EnumerationTask all6;
    all6.edge_count = 6;
    for (const Graph& g : graphs_with_edges(all6))
        if (g.max_degree() >= 4) ++high_count;
    // The lookahead prune must not cost any qualifying class.
    CHECK(high.size() == high_count);
}

TEST_CASE("vertex cap restricts the shapes generated") {
    EnumerationTask task;
    task.edge_count = 4;
    task.max_vertices = 4;
    for (const Graph& g : graphs_with_edges(task)) CHECK(g.order() <= 4);
}

TEST_CASE("budget is enforced") {
    EnumerationTask task;
    task.edge_count = 16;
    CHECK_THROWS_AS(graphs_with_edges(task), BudgetExceeded);
    CHECK_THROWS_AS(Enumerator(3).level(4), BudgetExceeded);
    EnumerationTask zero;
    zero.edge_count = 0;
    CHECK_THROWS_AS(graphs_with_edges(zero), InvalidParameter);
}
