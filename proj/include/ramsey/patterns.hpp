#ifndef RAMSEY_PATTERNS_HPP
#define RAMSEY_PATTERNS_HPP

#include <optional>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

/// A target to find inside a (sub)graph, always with plain subgraph
/// semantics (extra host edges never hurt).
struct Pattern {
    enum class Kind {
        Fan,
        Path,
        PathPack,
        Cycle,
        Clique,
        Star,
        Matching,
        CompleteBipartite,
        Generic,
    };

    Kind kind;
    int a = 0, b = 0;
    Graph graph;  // only for Generic

    static Pattern fan(int n) { return {Kind::Fan, n}; }
    static Pattern path(int m) { return {Kind::Path, m}; }
    static Pattern path_pack(int n, int m) { return {Kind::PathPack, n, m}; }
    static Pattern cycle(int l) { return {Kind::Cycle, l}; }
    static Pattern clique(int k) { return {Kind::Clique, k}; }
    static Pattern star(int k) { return {Kind::Star, k}; }
    static Pattern matching(int n) { return {Kind::Matching, n}; }
    static Pattern complete_bipartite(int m, int n) { return {Kind::CompleteBipartite, m, n}; }
    static Pattern generic(Graph g) {
        Pattern p{Kind::Generic};
        p.graph = std::move(g);
        return p;
    }

    /// CLI spelling: F3, P5, 2P4, C7, K4, K1,3, 3K2, K2,3, S4, g6:<string>.
    std::string name() const;

    /// The pattern as a concrete graph.
    Graph to_graph() const;

    int edge_count() const;
};

/// Vertices and edges realizing a pattern inside a host graph.
struct Witness {
    std::vector<int> vertices;
    std::vector<Edge> edges;
};

/// Subgraph containment with a validating witness on success.
std::optional<Witness> contains(const Graph& g, const Pattern& p);

/// Largest n with F_n a subgraph, with its center (ties to the lowest
/// vertex index). Returns {0, -1} for fan-free graphs.
std::pair<int, int> max_fan(const Graph& g);

/// Generic subgraph isomorphism (VF2-style backtracking): an injective map
/// of pattern into host, returned as the image witness.
std::optional<Witness> subgraph_iso(const Graph& host, const Graph& pattern);

Pattern parse_pattern(const std::string& text);

}  // namespace ramsey

#endif
