#include "ramsey/matching.hpp"

#include <bit>

namespace ramsey {

int Matcher::number(std::uint64_t mask) {
    int v = -1;
    std::uint64_t m = mask;
    while (m) {
        int w = std::countr_zero(m);
        m &= m - 1;
        if (g_.row(w) & mask) {
            v = w;
            break;
        }
    }
    if (v < 0) return 0;

    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;

    const std::uint64_t vbit = std::uint64_t{1} << v;
    int best = number(mask & ~vbit);  // leave v uncovered
    std::uint64_t nb = g_.row(v) & mask;
    while (nb) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        best = std::max(best, 1 + number(mask & ~vbit & ~(std::uint64_t{1} << u)));
    }
    memo_[mask] = best;
    return best;
}

std::vector<Edge> Matcher::matching(std::uint64_t mask) {
    std::vector<Edge> out;
    while (true) {
        const int total = number(mask);
        if (total == 0) break;
        int v = -1;
        std::uint64_t m = mask;
        while (m) {
            int w = std::countr_zero(m);
            m &= m - 1;
            if (g_.row(w) & mask) {
                v = w;
                break;
            }
        }
        const std::uint64_t vbit = std::uint64_t{1} << v;
        if (number(mask & ~vbit) == total) {
            mask &= ~vbit;
            continue;
        }
        std::uint64_t nb = g_.row(v) & mask;
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            const std::uint64_t rest = mask & ~vbit & ~(std::uint64_t{1} << u);
            if (1 + number(rest) == total) {
                out.emplace_back(v, u);
                mask = rest;
                break;
            }
        }
    }
    return out;
}

MatchingResult max_matching(const Graph& g) {
    Matcher m(g);
    auto edges = m.matching(g.full_mask());
    return {static_cast<int>(edges.size()), std::move(edges)};
}

int matching_number(const Graph& g, std::uint64_t mask) {
    Matcher m(g);
    return m.number(mask);
}

}  // namespace ramsey
