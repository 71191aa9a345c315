#include "doctest.h"
#include "ramsey/canonical.hpp"
#include "ramsey/family.hpp"

using namespace ramsey;

namespace {
void expect_shape(const FamilySpec& spec, int order, int size) {
    Graph g = build(spec);
    CHECK(g.order() == order);
    CHECK(g.size() == size);
}
}  // namespace

TEST_CASE("family orders and sizes") {
    expect_shape(FamilySpec::path(5), 5, 4);
    expect_shape(FamilySpec::cycle(7), 7, 7);
    expect_shape(FamilySpec::clique(5), 5, 10);
    expect_shape(FamilySpec::star(4), 5, 4);
    expect_shape(FamilySpec::matching(3), 6, 3);
    expect_shape(FamilySpec::fan(2), 5, 6);          // F2 = K1 + 2K2
    expect_shape(FamilySpec::wheel(5), 6, 10);
    expect_shape(FamilySpec::complete_bipartite(2, 3), 5, 6);
    expect_shape(FamilySpec::path_union(3, 3), 9, 6);
    expect_shape(FamilySpec::k1_plus_nc4(2), 9, 16);       // 8n edges
    expect_shape(FamilySpec::k1_plus_nc4_p3(1), 8, 13);    // 8n + 5 edges
    expect_shape(FamilySpec::h_graph(3), 10, 18);          // 2n+4 vertices, 5n+3 edges
    expect_shape(FamilySpec::two_f2(), 10, 12);
}

TEST_CASE("fan and wheel structure") {
    Graph f = build(FamilySpec::fan(3));
    CHECK(f.degree(6) == 6);  // center joined to every rim vertex
    for (int i = 0; i < 3; ++i) CHECK(f.adjacent(2 * i, 2 * i + 1));
    Graph w = build(FamilySpec::wheel(4));
    CHECK(w.degree(4) == 4);
    CHECK(is_isomorphic(build(FamilySpec::wheel(3)), build(FamilySpec::clique(4))));
}

TEST_CASE("h graph structure") {
    Graph h = build(FamilySpec::h_graph(2));
    const int u = 4, v = 5, u1 = 6, u2 = 7;
    CHECK(h.degree(u) == 2 * 2 + 2);  // rim plus pendant triangle
    CHECK(h.degree(v) == 2 * 2);
    CHECK(h.adjacent(u1, u2));
    CHECK(h.adjacent(u, u1));
    CHECK(h.adjacent(u, u2));
    CHECK_FALSE(h.adjacent(v, u1));
}

TEST_CASE("composite specs") {
    Graph two_k3 = build(FamilySpec::disjoint_union({FamilySpec::clique(3), FamilySpec::clique(3)}));
    CHECK(two_k3.order() == 6);
    CHECK(two_k3.size() == 6);
    CHECK_FALSE(two_k3.connected());
    // K1 + 3K2 is the fan F3.
    Graph joined = build(FamilySpec::join_one(FamilySpec::matching(3)));
    CHECK(is_isomorphic(joined, build(FamilySpec::fan(3))));
}

TEST_CASE("family parameter validation") {
    CHECK_THROWS_AS(build(FamilySpec::cycle(2)), InvalidParameter);
    CHECK_THROWS_AS(build(FamilySpec::path(1)), InvalidParameter);
    CHECK_THROWS_AS(build(FamilySpec::fan(0)), InvalidParameter);
    CHECK_THROWS_AS(build(FamilySpec::matching(33)), CapacityExceeded);
}

TEST_CASE("family grammar") {
    CHECK(is_isomorphic(build(parse_family("H3")), build(FamilySpec::h_graph(3))));
    CHECK(is_isomorphic(build(parse_family("F2")), build(FamilySpec::fan(2))));
    CHECK(is_isomorphic(build(parse_family("K1+2C4")), build(FamilySpec::k1_plus_nc4(2))));
    CHECK(is_isomorphic(build(parse_family("K1+1C4+P3")), build(FamilySpec::k1_plus_nc4_p3(1))));
    CHECK(is_isomorphic(build(parse_family("2F2")), build(FamilySpec::two_f2())));
    CHECK(is_isomorphic(build(parse_family("3K2")), build(FamilySpec::matching(3))));
    CHECK(parse_family("2P3").kind == FamilySpec::Kind::PathUnion);
    CHECK(is_isomorphic(build(parse_family("2P3")), build(FamilySpec::path_union(2, 3))));
    CHECK(is_isomorphic(build(parse_family("K3,4")),
                        build(FamilySpec::complete_bipartite(3, 4))));
    CHECK(is_isomorphic(build(parse_family("S4")), build(FamilySpec::star(4))));
    CHECK(is_isomorphic(build(parse_family("2K3")),
                        build(FamilySpec::disjoint_union(
                            {FamilySpec::clique(3), FamilySpec::clique(3)}))));
    CHECK_THROWS_AS(parse_family(""), InvalidParameter);
    CHECK_THROWS_AS(parse_family("Q7"), InvalidParameter);
    CHECK_THROWS_AS(parse_family("P3x"), InvalidParameter);
    CHECK_THROWS_AS(parse_family("K1+2C5"), InvalidParameter);
}
