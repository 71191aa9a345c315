#include <random>

#include "doctest.h"
#include "ramsey/graph6.hpp"

using namespace ramsey;

TEST_CASE("graph6 known encodings") {
    CHECK(write_graph6(Graph(1)) == "@");
    CHECK(write_graph6(Graph::from_edges(2, {{0, 1}})) == "A_");
    CHECK(write_graph6(Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}})) ==
          "C~");  // K4
    CHECK(parse_graph6("@").order() == 1);
    CHECK(parse_graph6("A_").size() == 1);
    CHECK(parse_graph6("C~").size() == 6);
}

TEST_CASE("graph6 round-trips random graphs, short and long headers") {
    std::mt19937 rng(12345);
    for (int n : {2, 5, 17, 40, 62, 63, 64}) {
        Graph g(n);
        std::bernoulli_distribution coin(0.3);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) g.add_edge(u, v);
        const std::string s = write_graph6(g);
        CHECK(parse_graph6(s) == g);
        if (n > 62) CHECK(s[0] == '~');
    }
}

TEST_CASE("graph6 strict parsing") {
    CHECK_THROWS_AS(parse_graph6(""), MalformedGraph6);
    CHECK_THROWS_AS(parse_graph6("A_x"), MalformedGraph6);   // trailing garbage
    CHECK_THROWS_AS(parse_graph6("A"), MalformedGraph6);     // truncated body
    CHECK_THROWS_AS(parse_graph6("A\x1f"), MalformedGraph6); // byte below offset
    CHECK_THROWS_AS(parse_graph6("A`"), MalformedGraph6);    // nonzero padding bits
    // 65 vertices exceeds the engine's capacity even though graph6 allows it.
    CHECK_THROWS_AS(parse_graph6("~?A@???????????"), MalformedGraph6);
}
