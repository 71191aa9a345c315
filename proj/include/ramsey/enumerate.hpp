#ifndef RAMSEY_ENUMERATE_HPP
#define RAMSEY_ENUMERATE_HPP

#include <string>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

struct EnumerationTask {
    int edge_count = 1;
    int min_max_degree = 0;    // 0 = no constraint
    bool connected_only = false;
    int max_vertices = 0;      // 0 = min(2q, 64)
    int budget = 15;           // refuse larger q
};

/// All graphs with exactly q edges and no isolated vertices, one per
/// isomorphism class, canonically labeled and in canonical (graph6) order.
std::vector<Graph> graphs_with_edges(const EnumerationTask& task);

std::uint64_t count_with_edges(const EnumerationTask& task);

/// Incremental level-by-level generator, caching the unconstrained levels as
/// sorted canonical graph6 strings so ascending sweeps reuse earlier work.
class Enumerator {
public:
    explicit Enumerator(int budget = 15) : budget_(budget) {}

    /// Canonical graph6 strings of all q-edge isomorphism classes.
    const std::vector<std::string>& level(int q);

private:
    int budget_;
    std::vector<std::vector<std::string>> levels_;  // levels_[q-1]
};

}  // namespace ramsey

#endif
