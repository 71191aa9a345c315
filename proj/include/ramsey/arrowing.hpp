#ifndef RAMSEY_ARROWING_HPP
#define RAMSEY_ARROWING_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/patterns.hpp"

namespace ramsey {

/// A red/blue partition of a host graph's edge set.
struct EdgeColoring {
    Graph host;
    std::vector<Edge> red;
    std::vector<Edge> blue;
};

struct ArrowVerdict {
    bool arrows;
    std::uint64_t avoiders_examined = 0;
    double elapsed_s = 0.0;
    std::optional<EdgeColoring> certificate;  // set when !arrows
};

struct ArrowOptions {
    int generic_budget = 24;  // max edges for the generic avoider path
};

/// Callback returns false to stop the stream early.
using EdgeSetSink = std::function<bool(const std::vector<Edge>&)>;

/// Maximal P3-free edge sets = maximal matchings, each emitted once.
void maximal_p3_free_sets(const Graph& g, const EdgeSetSink& sink);
std::vector<std::vector<Edge>> maximal_p3_free_sets(const Graph& g);

/// Maximal 2K2-free edge sets: full vertex stars and triangles, with
/// non-maximal and duplicate sets dropped.
void maximal_2k2_free_sets(const Graph& g, const EdgeSetSink& sink);
std::vector<std::vector<Edge>> maximal_2k2_free_sets(const Graph& g);

/// Brute-force fallback: all maximal edge sets whose graph omits the
/// pattern. Throws BudgetExceeded when the host has more than budget edges.
void maximal_avoiders_generic(const Graph& g, const Pattern& red, int budget,
                              const EdgeSetSink& sink);
std::vector<std::vector<Edge>> maximal_avoiders_generic(const Graph& g, const Pattern& red,
                                                        int budget = 24);

/// Decides g -> (red, blue) by checking the blue remainder of every maximal
/// red-avoider; the first failing avoider becomes the certificate.
ArrowVerdict arrows(const Graph& g, const Pattern& red, const Pattern& blue,
                    const ArrowOptions& opts = {});

/// True when the coloring certifies non-arrowing: the red subgraph omits the
/// red pattern and the blue subgraph omits the blue pattern.
bool check_coloring(const EdgeColoring& c, const Pattern& red, const Pattern& blue);

/// One cycle or path component in traversal order.
struct Period3Component {
    bool is_cycle;
    std::vector<int> vertices;
};

struct Period3Plan {
    std::vector<Period3Component> components;
    std::vector<Edge> red;
};

/// Decomposes a graph whose components are all cycles, paths or isolated
/// vertices; throws InvalidComponent otherwise.
Period3Plan period3_plan(const Graph& g);

/// The adversary coloring that puts red on the (3i+1)-th edge along each
/// cycle/path and blue elsewhere; the red side is always a matching and each
/// cycle of length l keeps blue matching number ceil(l/3).
EdgeColoring period3_coloring(const Graph& g);

/// Left side of the degree inequality used by the lower-bound case analysis:
/// sum(4*ceil(c/3) - 2c) + sum(4*ceil(p/3) - 2p - 1) + 3 + eps, compared
/// against d(u).
std::pair<long, bool> eval_inequality1(const std::vector<int>& cycle_lengths,
                                       const std::vector<int>& path_lengths, int du, int eps);

}  // namespace ramsey

#endif
