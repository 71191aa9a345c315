#include "doctest.h"
#include "ramsey/graph.hpp"

using namespace ramsey;

TEST_CASE("graph construction and edge bookkeeping") {
    Graph g(4);
    CHECK(g.order() == 4);
    CHECK(g.size() == 0);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    CHECK(g.size() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.max_degree() == 2);
    CHECK(g.degree_sequence() == std::vector<int>{0, 1, 1, 2});
    g.remove_edge(0, 1);
    CHECK(g.size() == 1);
    CHECK_FALSE(g.adjacent(0, 1));
}

TEST_CASE("graph rejects loops and out-of-range endpoints") {
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 0), InvalidParameter);
    CHECK_THROWS_AS(g.add_edge(0, 3), InvalidParameter);
    CHECK_THROWS_AS(g.add_edge(-1, 1), InvalidParameter);
    CHECK_THROWS_AS(Graph(65), CapacityExceeded);
}

TEST_CASE("from_edges and edge_list round-trip") {
    Graph g = Graph::from_edges(5, {{0, 1}, {3, 2}, {4, 0}});
    CHECK(g.edge_list() == std::vector<Edge>{{0, 1}, {0, 4}, {2, 3}});
}

TEST_CASE("components, connectivity and isolated vertices") {
    Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {4, 5}});
    CHECK_FALSE(g.connected());
    CHECK(g.has_isolated_vertex());  // vertex 3
    CHECK(g.component_masks().size() == 3);
    Graph h = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(h.connected());
    CHECK_FALSE(h.has_isolated_vertex());
}

TEST_CASE("induced subgraph compacts labels") {
    Graph g = Graph::from_edges(5, {{0, 2}, {2, 4}, {1, 3}});
    Graph ind = g.induced(0b10101);  // vertices 0, 2, 4
    CHECK(ind.order() == 3);
    CHECK(ind.edge_list() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("relabeling permutes adjacency") {
    Graph g = Graph::from_edges(3, {{0, 1}});
    Graph r = g.relabeled({2, 0, 1});  // new vertex i is old perm[i]
    CHECK(r.adjacent(1, 2));
    CHECK_FALSE(r.adjacent(0, 1));
}

TEST_CASE("subgraph and edge removal") {
    Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    Graph sub = g.subgraph_edges({{1, 2}});
    CHECK(sub.size() == 1);
    CHECK(sub.order() == 4);
    Graph rem = g.without_edges({{1, 2}});
    CHECK(rem.edge_list() == std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK_THROWS_AS(g.subgraph_edges({{0, 3}}), InvalidParameter);  // not a host edge
}
