#ifndef TESTS_ORACLES_HPP
#define TESTS_ORACLES_HPP

// Deliberately naive reference implementations used to cross-check the
// engine. Everything here favors obvious correctness over speed and shares
// no logic with the library paths under test.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "ramsey/arrowing.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/patterns.hpp"

namespace oracles {

using ramsey::Edge;
using ramsey::Graph;
using ramsey::Pattern;

/// Arrowing by trying all 2^|E| red subsets.
inline bool arrows_bruteforce(const Graph& g, const Pattern& red, const Pattern& blue) {
    const auto edges = g.edge_list();
    const int m = static_cast<int>(edges.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<Edge> reds, blues;
        for (int i = 0; i < m; ++i)
            (mask >> i & 1 ? reds : blues).push_back(edges[i]);
        if (!ramsey::contains(g.subgraph_edges(reds), red) &&
            !ramsey::contains(g.subgraph_edges(blues), blue))
            return false;
    }
    return true;
}

/// Maximum matching by exhaustive include/exclude over the edge list.
inline int matching_bruteforce(const Graph& g) {
    const auto edges = g.edge_list();
    const int m = static_cast<int>(edges.size());
    int best = 0;
    auto rec = [&](auto&& self, int i, std::uint64_t covered, int size) -> void {
        best = std::max(best, size);
        for (int j = i; j < m; ++j) {
            const auto [u, v] = edges[j];
            const std::uint64_t uv = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
            if (covered & uv) continue;
            self(self, j + 1, covered | uv, size + 1);
        }
    };
    rec(rec, 0, 0, 0);
    return best;
}

/// Isomorphism by degree-pruned permutation backtracking; no canonical forms.
inline bool isomorphic_bruteforce(const Graph& a, const Graph& b) {
    const int n = a.order();
    if (n != b.order() || a.size() != b.size()) return false;
    auto da = a.degree_sequence(), db = b.degree_sequence();
    if (da != db) return false;

    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, int u) -> bool {
        if (u == n) return true;
        for (int v = 0; v < n; ++v) {
            if (used[v] || a.degree(u) != b.degree(v)) continue;
            bool ok = true;
            for (int w = 0; w < u && ok; ++w)
                ok = a.adjacent(u, w) == b.adjacent(v, map[w]);
            if (!ok) continue;
            map[u] = v;
            used[v] = true;
            if (self(self, u + 1)) return true;
            used[v] = false;
            map[u] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

/// Isomorphism classes of q-edge graphs without isolated vertices, counted
/// by generating every labeled graph (all vertex counts, all edge subsets)
/// and reducing with the brute-force isomorphism test.
inline std::uint64_t count_classes_bruteforce(int q) {
    std::map<std::vector<int>, std::vector<Graph>> reps;  // keyed by degree sequence
    std::uint64_t classes = 0;
    for (int n = 2; n <= 2 * q; ++n) {
        std::vector<Edge> all;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
        const int m = static_cast<int>(all.size());
        std::vector<int> pick(q);
        auto rec = [&](auto&& self, int slot, int from) -> void {
            if (slot == q) {
                Graph g(n);
                for (int i : pick) g.add_edge(all[i].first, all[i].second);
                if (g.has_isolated_vertex()) return;
                auto& bucket = reps[g.degree_sequence()];
                for (const Graph& r : bucket)
                    if (isomorphic_bruteforce(g, r)) return;
                bucket.push_back(g);
                ++classes;
                return;
            }
            for (int i = from; i <= m - (q - slot); ++i) {
                pick[slot] = i;
                self(self, slot + 1, i + 1);
            }
        };
        rec(rec, 0, 0);
    }
    return classes;
}

}  // namespace oracles

#endif
