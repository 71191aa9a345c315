#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ramsey/family.hpp"
#include "ramsey/matching.hpp"

using namespace ramsey;

TEST_CASE("matching number on structured graphs") {
    CHECK(max_matching(build(FamilySpec::path(7))).size == 3);
    CHECK(max_matching(build(FamilySpec::cycle(5))).size == 2);   // odd cycle
    CHECK(max_matching(build(FamilySpec::cycle(9))).size == 4);
    CHECK(max_matching(build(FamilySpec::clique(6))).size == 3);
    CHECK(max_matching(build(FamilySpec::star(8))).size == 1);
    CHECK(max_matching(build(FamilySpec::matching(5))).size == 5);
    CHECK(max_matching(Graph(4)).size == 0);
}

TEST_CASE("returned matching edges are a valid matching of maximum size") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 9);
        Graph g(n);
        std::bernoulli_distribution coin(0.3);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) g.add_edge(u, v);
        auto r = max_matching(g);
        CHECK(static_cast<int>(r.edges.size()) == r.size);
        std::uint64_t covered = 0;
        for (auto [u, v] : r.edges) {
            CHECK(g.adjacent(u, v));
            const std::uint64_t uv = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
            CHECK((covered & uv) == 0);
            covered |= uv;
        }
        CHECK(r.size == oracles::matching_bruteforce(g));
    }
}

TEST_CASE("matching agrees with the subset oracle on odd-cycle-rich graphs") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        // Two odd cycles plus random chords: the classic blossom territory.
        Graph g(12);
        for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
        for (int i = 0; i < 7; ++i) g.add_edge(5 + i, 5 + (i + 1) % 7);
        std::uniform_int_distribution<int> pick(0, 11);
        for (int k = 0; k < 4; ++k) {
            int u = pick(rng), v = pick(rng);
            if (u != v && !g.adjacent(u, v)) g.add_edge(u, v);
        }
        CHECK(max_matching(g).size == oracles::matching_bruteforce(g));
    }
}

TEST_CASE("masked matching number") {
    Graph g = build(FamilySpec::cycle(6));
    CHECK(matching_number(g, g.full_mask()) == 3);
    CHECK(matching_number(g, 0b000111) == 1);  // a P3 piece of the cycle
    CHECK(matching_number(g, 0) == 0);
}
