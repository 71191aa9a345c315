#ifndef RAMSEY_FAMILY_HPP
#define RAMSEY_FAMILY_HPP

#include <memory>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

/// Named graph families. Parametric constructors assign deterministic vertex
/// numbering; joined centers are always the last vertex.
struct FamilySpec {
    enum class Kind {
        Path,              // P_m, m >= 2 vertices
        Cycle,             // C_n, n >= 3
        Clique,            // K_n, n >= 2
        Star,              // K_{1,k}, k >= 1 edges, center last
        Matching,          // nK_2
        Fan,               // F_n = K_1 + nK_2
        Wheel,             // W_n = K_1 + C_n
        CompleteBipartite, // K_{m,n}
        PathUnion,         // nP_m
        K1PlusNC4,         // K_1 + nC_4
        K1PlusNC4P3,       // K_1 + (nC_4 u P_3)
        HGraph,            // two fans F_n on a shared rim plus a pendant triangle
        TwoF2,             // 2F_2
        DisjointUnion,
        JoinOne,           // K_1 + inner, center last
    };

    Kind kind;
    int a = 0, b = 0;
    std::vector<FamilySpec> parts;  // DisjointUnion / JoinOne

    static FamilySpec path(int m) { return {Kind::Path, m}; }
    static FamilySpec cycle(int n) { return {Kind::Cycle, n}; }
    static FamilySpec clique(int n) { return {Kind::Clique, n}; }
    static FamilySpec star(int k) { return {Kind::Star, k}; }
    static FamilySpec matching(int n) { return {Kind::Matching, n}; }
    static FamilySpec fan(int n) { return {Kind::Fan, n}; }
    static FamilySpec wheel(int n) { return {Kind::Wheel, n}; }
    static FamilySpec complete_bipartite(int m, int n) { return {Kind::CompleteBipartite, m, n}; }
    static FamilySpec path_union(int n, int m) { return {Kind::PathUnion, n, m}; }
    static FamilySpec k1_plus_nc4(int n) { return {Kind::K1PlusNC4, n}; }
    static FamilySpec k1_plus_nc4_p3(int n) { return {Kind::K1PlusNC4P3, n}; }
    static FamilySpec h_graph(int n) { return {Kind::HGraph, n}; }
    static FamilySpec two_f2() { return {Kind::TwoF2}; }
    static FamilySpec disjoint_union(std::vector<FamilySpec> parts) {
        FamilySpec s{Kind::DisjointUnion};
        s.parts = std::move(parts);
        return s;
    }
    static FamilySpec join_one(FamilySpec inner) {
        FamilySpec s{Kind::JoinOne};
        s.parts.push_back(std::move(inner));
        return s;
    }
};

/// Builds the named graph. Throws InvalidParameter for out-of-domain
/// parameters and CapacityExceeded past 64 vertices.
Graph build(const FamilySpec& spec);

/// Parses the CLI family grammar: H<n>, F<n>, W<n>, P<m>, C<n>, K<n>,
/// K<m>,<n>, S<k>, K1+<n>C4, K1+<n>C4+P3, optionally prefixed by a
/// disjoint-union multiplier (2F2, 3K2, 2P3, 2K3, ...).
FamilySpec parse_family(const std::string& text);

}  // namespace ramsey

#endif
