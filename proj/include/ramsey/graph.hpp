#ifndef RAMSEY_GRAPH_HPP
#define RAMSEY_GRAPH_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

inline constexpr int kMaxVertices = 64;

struct CapacityExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidParameter : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PartitionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidComponent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Edge = std::pair<int, int>;

/// Simple undirected graph on at most 64 vertices. Each adjacency row is a
/// single machine word, so neighborhood intersections, degree counts and
/// induced-subgraph masks are all one or two instructions.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > kMaxVertices)
            throw CapacityExceeded("vertex count out of range: " + std::to_string(n));
    }

    static Graph from_edges(int n, const std::vector<Edge>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int order() const { return n_; }

    /// Number of edges.
    int size() const {
        int total = 0;
        for (int v = 0; v < n_; ++v) total += std::popcount(adj_[v]);
        return total / 2;
    }

    std::uint64_t row(int v) const { return adj_[v]; }

    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }

    void add_edge(int u, int v) {
        check_pair(u, v);
        adj_[u] |= std::uint64_t{1} << v;
        adj_[v] |= std::uint64_t{1} << u;
    }

    void remove_edge(int u, int v) {
        check_pair(u, v);
        adj_[u] &= ~(std::uint64_t{1} << v);
        adj_[v] &= ~(std::uint64_t{1} << u);
    }

    /// Appends an isolated vertex, returns its index.
    int add_vertex() {
        if (n_ >= kMaxVertices) throw CapacityExceeded("graph already has 64 vertices");
        return n_++;
    }

    int degree(int v) const { return std::popcount(adj_[v]); }

    int max_degree() const {
        int best = 0;
        for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
        return best;
    }

    /// Degree sequence in ascending order.
    std::vector<int> degree_sequence() const {
        std::vector<int> d;
        d.reserve(n_);
        for (int v = 0; v < n_; ++v) d.push_back(degree(v));
        std::sort(d.begin(), d.end());
        return d;
    }

    std::vector<Edge> edge_list() const {
        std::vector<Edge> edges;
        for (int v = 0; v < n_; ++v) {
            std::uint64_t higher = adj_[v] >> (v + 1) << (v + 1);
            while (higher) {
                int u = std::countr_zero(higher);
                higher &= higher - 1;
                edges.emplace_back(v, u);
            }
        }
        return edges;
    }

    std::uint64_t full_mask() const {
        return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    bool has_isolated_vertex() const {
        for (int v = 0; v < n_; ++v)
            if (adj_[v] == 0) return true;
        return false;
    }

    /// Vertex masks of the connected components (isolated vertices included
    /// as singletons), ordered by lowest contained vertex.
    std::vector<std::uint64_t> component_masks() const {
        std::vector<std::uint64_t> comps;
        std::uint64_t seen = 0;
        for (int v = 0; v < n_; ++v) {
            std::uint64_t bit = std::uint64_t{1} << v;
            if (seen & bit) continue;
            std::uint64_t comp = bit, frontier = bit;
            while (frontier) {
                std::uint64_t next = 0;
                while (frontier) {
                    int w = std::countr_zero(frontier);
                    frontier &= frontier - 1;
                    next |= adj_[w] & ~comp;
                }
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            comps.push_back(comp);
        }
        return comps;
    }

    bool connected() const {
        if (n_ == 0) return true;
        return component_masks().size() == 1;
    }

    /// Subgraph on the same vertex set keeping only the given edges.
    Graph subgraph_edges(const std::vector<Edge>& edges) const {
        Graph g(n_);
        for (auto [u, v] : edges) {
            if (!adjacent(u, v))
                throw InvalidParameter("subgraph edge not present in host");
            g.add_edge(u, v);
        }
        return g;
    }

    Graph without_edges(const std::vector<Edge>& edges) const {
        Graph g = *this;
        for (auto [u, v] : edges) g.remove_edge(u, v);
        return g;
    }

    /// Induced subgraph on the masked vertices, compacted to labels
    /// 0..k-1 in ascending original order.
    Graph induced(std::uint64_t mask) const {
        std::array<int, kMaxVertices> remap{};
        int k = 0;
        for (int v = 0; v < n_; ++v)
            if ((mask >> v) & 1u) remap[v] = k++;
        Graph g(k);
        for (int v = 0; v < n_; ++v) {
            if (!((mask >> v) & 1u)) continue;
            std::uint64_t nb = adj_[v] & mask;
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                if (u > v) g.add_edge(remap[v], remap[u]);
            }
        }
        return g;
    }

    /// Relabeled copy: vertex i of the result is vertex perm[i] of this graph.
    Graph relabeled(const std::vector<int>& perm) const {
        std::array<int, kMaxVertices> inv{};
        for (int i = 0; i < n_; ++i) inv[perm[i]] = i;
        Graph g(n_);
        for (auto [u, v] : edge_list()) g.add_edge(inv[u], inv[v]);
        return g;
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    void check_pair(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw InvalidParameter("vertex index out of range");
        if (u == v) throw InvalidParameter("self-loops are not allowed");
    }

    int n_ = 0;
    std::array<std::uint64_t, kMaxVertices> adj_{};
};

}  // namespace ramsey

#endif
