#ifndef RAMSEY_MATCHING_HPP
#define RAMSEY_MATCHING_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

/// Exact maximum matching by branching on the lowest covered-candidate
/// vertex, memoized on the remaining-vertex mask. Exponential in the worst
/// case but exact on general graphs (odd cycles included), which is what the
/// fan checks need; hosts stay well under 64 vertices.
class Matcher {
public:
    explicit Matcher(const Graph& g) : g_(g) {}

    int number(std::uint64_t mask);

    /// A maximum matching inside mask, reconstructed from the memo table.
    std::vector<Edge> matching(std::uint64_t mask);

private:
    const Graph& g_;
    std::unordered_map<std::uint64_t, int> memo_;
};

struct MatchingResult {
    int size;
    std::vector<Edge> edges;
};

MatchingResult max_matching(const Graph& g);

/// Matching number of the subgraph induced by mask.
int matching_number(const Graph& g, std::uint64_t mask);

}  // namespace ramsey

#endif
