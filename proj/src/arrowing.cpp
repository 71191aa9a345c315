#include "ramsey/arrowing.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

namespace ramsey {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

std::vector<Edge> normalized(std::vector<Edge> edges) {
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    return edges;
}

/// Enumerates maximal matchings by branching on the lowest free vertex that
/// still has a free neighbor: match it with each such neighbor, or leave it
/// permanently unmatched. Leaves where an unmatched vertex still has an
/// unmatched neighbor are discarded, so exactly the maximal matchings come
/// out, each once.
struct MaximalMatchingEnum {
    const Graph& g;
    const EdgeSetSink& sink;
    std::vector<Edge> current;
    std::uint64_t matched = 0, excluded = 0;

    bool run() { return rec(); }

    bool rec() {
        const std::uint64_t all = g.full_mask();
        const std::uint64_t free = all & ~matched & ~excluded;
        int v = -1;
        std::uint64_t scan = free;
        while (scan) {
            int w = std::countr_zero(scan);
            scan &= scan - 1;
            if (g.row(w) & free) {
                v = w;
                break;
            }
        }
        if (v < 0) {
            std::uint64_t unmatched = all & ~matched;
            std::uint64_t ex = excluded;
            while (ex) {
                int x = std::countr_zero(ex);
                ex &= ex - 1;
                if (g.row(x) & unmatched) return true;  // not maximal
            }
            return sink(current);
        }
        std::uint64_t nb = g.row(v) & free;
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            current.emplace_back(v, u);
            matched |= bit(v) | bit(u);
            if (!rec()) return false;
            matched &= ~(bit(v) | bit(u));
            current.pop_back();
        }
        excluded |= bit(v);
        bool cont = rec();
        excluded &= ~bit(v);
        return cont;
    }
};

std::vector<Edge> star_edges(const Graph& g, int v) {
    std::vector<Edge> edges;
    std::uint64_t nb = g.row(v);
    while (nb) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    return edges;
}

}  // namespace

void maximal_p3_free_sets(const Graph& g, const EdgeSetSink& sink) {
    MaximalMatchingEnum e{g, sink};
    e.run();
}

void maximal_2k2_free_sets(const Graph& g, const EdgeSetSink& sink) {
    if (g.size() == 0) {
        sink({});
        return;
    }
    // Full vertex stars, skipping those contained in another star or in a
    // triangle, so every emitted set is strictly maximal.
    for (int v = 0; v < g.order(); ++v) {
        const int deg = g.degree(v);
        if (deg == 0) continue;
        if (deg == 1) {
            const int u = std::countr_zero(g.row(v));
            if (g.degree(u) > 1) continue;  // E(v) inside E(u)
            if (u < v) continue;            // isolated edge, emit once
        }
        if (deg == 2) {
            std::uint64_t nb = g.row(v);
            const int x = std::countr_zero(nb);
            const int y = std::countr_zero(nb & (nb - 1));
            if (g.adjacent(x, y)) continue;  // E(v) inside a triangle
        }
        if (!sink(star_edges(g, v))) return;
    }
    // Triangles; a triangle plus any further edge always has a 2K2, so these
    // are maximal as they stand.
    for (int a = 0; a < g.order(); ++a) {
        std::uint64_t bs = g.row(a) & ~(bit(a + 1) - 1);
        while (bs) {
            int b = std::countr_zero(bs);
            bs &= bs - 1;
            std::uint64_t cs = g.row(a) & g.row(b) & ~(bit(b + 1) - 1);
            while (cs) {
                int c = std::countr_zero(cs);
                cs &= cs - 1;
                if (!sink({{a, b}, {b, c}, {a, c}})) return;
            }
        }
    }
}

void maximal_avoiders_generic(const Graph& g, const Pattern& red, int budget,
                              const EdgeSetSink& sink) {
    const auto edges = g.edge_list();
    const int m = static_cast<int>(edges.size());
    if (m > budget)
        throw BudgetExceeded("generic avoider enumeration limited to " +
                             std::to_string(budget) + " edges, host has " + std::to_string(m));

    Graph accum(g.order());
    if (contains(accum, red)) return;  // even the empty set is no avoider

    std::vector<Edge> current;
    std::vector<int> skipped;
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == m) {
            for (int j : skipped) {
                Graph extended = accum;
                extended.add_edge(edges[j].first, edges[j].second);
                if (!contains(extended, red)) return true;  // extendable, not maximal
            }
            return sink(current);
        }
        Graph extended = accum;
        extended.add_edge(edges[i].first, edges[i].second);
        if (!contains(extended, red)) {
            current.push_back(edges[i]);
            std::swap(accum, extended);
            if (!self(self, i + 1)) return false;
            std::swap(accum, extended);
            current.pop_back();
        }
        skipped.push_back(i);
        bool cont = self(self, i + 1);
        skipped.pop_back();
        return cont;
    };
    rec(rec, 0);
}

std::vector<std::vector<Edge>> maximal_p3_free_sets(const Graph& g) {
    std::vector<std::vector<Edge>> out;
    maximal_p3_free_sets(g, [&](const std::vector<Edge>& s) {
        out.push_back(normalized(s));
        return true;
    });
    return out;
}

std::vector<std::vector<Edge>> maximal_2k2_free_sets(const Graph& g) {
    std::vector<std::vector<Edge>> out;
    maximal_2k2_free_sets(g, [&](const std::vector<Edge>& s) {
        out.push_back(normalized(s));
        return true;
    });
    return out;
}

std::vector<std::vector<Edge>> maximal_avoiders_generic(const Graph& g, const Pattern& red,
                                                        int budget) {
    std::vector<std::vector<Edge>> out;
    maximal_avoiders_generic(g, red, budget, [&](const std::vector<Edge>& s) {
        out.push_back(normalized(s));
        return true;
    });
    return out;
}

ArrowVerdict arrows(const Graph& g, const Pattern& red, const Pattern& blue,
                    const ArrowOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&]() {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };
    auto all_edges = g.edge_list();

    // A graph that does not even contain the blue target monochromatically
    // cannot arrow; same on the red side.
    if (blue.edge_count() >= 1 && !contains(g, blue))
        return {false, 0, elapsed(), EdgeColoring{g, {}, all_edges}};
    if (red.edge_count() >= 1 && !contains(g, red))
        return {false, 0, elapsed(), EdgeColoring{g, all_edges, {}}};

    std::uint64_t examined = 0;
    std::optional<EdgeColoring> certificate;
    auto check = [&](const std::vector<Edge>& avoider) {
        ++examined;
        Graph remainder = g.without_edges(avoider);
        if (contains(remainder, blue)) return true;
        certificate = EdgeColoring{g, normalized(avoider), remainder.edge_list()};
        return false;  // first failure wins
    };

    if (red.kind == Pattern::Kind::Path && red.a == 3) {
        maximal_p3_free_sets(g, check);
    } else if (red.kind == Pattern::Kind::Matching && red.a == 2) {
        maximal_2k2_free_sets(g, check);
    } else {
        maximal_avoiders_generic(g, red, opts.generic_budget, check);
    }

    if (certificate) return {false, examined, elapsed(), std::move(certificate)};
    return {true, examined, elapsed(), std::nullopt};
}

bool check_coloring(const EdgeColoring& c, const Pattern& red, const Pattern& blue) {
    auto reds = normalized(c.red);
    auto blues = normalized(c.blue);
    std::vector<Edge> merged;
    std::merge(reds.begin(), reds.end(), blues.begin(), blues.end(), std::back_inserter(merged));
    if (std::adjacent_find(merged.begin(), merged.end()) != merged.end())
        throw PartitionMismatch("red and blue edge sets overlap");
    if (merged != normalized(c.host.edge_list()))
        throw PartitionMismatch("red and blue sets do not partition the host edges");
    return !contains(c.host.subgraph_edges(reds), red) &&
           !contains(c.host.subgraph_edges(blues), blue);
}

Period3Plan period3_plan(const Graph& g) {
    Period3Plan plan;
    for (std::uint64_t mask : g.component_masks()) {
        std::vector<int> deg1;
        int count = 0;
        std::uint64_t scan = mask;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            ++count;
            const int d = std::popcount(g.row(v) & mask);
            if (d > 2) throw InvalidComponent("component has a vertex of degree > 2");
            if (d <= 1) deg1.push_back(v);
        }
        Period3Component comp;
        if (count == 1) {
            comp = {false, {deg1.front()}};
        } else if (deg1.empty()) {
            comp.is_cycle = true;
            int start = std::countr_zero(mask);
            int prev = -1, cur = start;
            do {
                comp.vertices.push_back(cur);
                std::uint64_t nb = g.row(cur) & mask;
                int next = -1;
                while (nb) {
                    int u = std::countr_zero(nb);
                    nb &= nb - 1;
                    if (u != prev) {
                        next = u;
                        break;
                    }
                }
                prev = cur;
                cur = next;
            } while (cur != start);
        } else {
            comp.is_cycle = false;
            int prev = -1, cur = deg1.front();
            while (cur != -1) {
                comp.vertices.push_back(cur);
                std::uint64_t nb = g.row(cur) & mask;
                int next = -1;
                while (nb) {
                    int u = std::countr_zero(nb);
                    nb &= nb - 1;
                    if (u != prev) {
                        next = u;
                        break;
                    }
                }
                prev = cur;
                cur = next;
            }
        }
        const int len = static_cast<int>(comp.vertices.size()) - (comp.is_cycle ? 0 : 1);
        for (int i = 0; 3 * i < 3 * (len / 3); ++i) {
            const int e = 3 * i;
            const int a = comp.vertices[e];
            const int b = comp.vertices[(e + 1) % comp.vertices.size()];
            plan.red.emplace_back(std::min(a, b), std::max(a, b));
        }
        plan.components.push_back(std::move(comp));
    }
    std::sort(plan.red.begin(), plan.red.end());
    return plan;
}

EdgeColoring period3_coloring(const Graph& g) {
    Period3Plan plan = period3_plan(g);
    Graph remainder = g.without_edges(plan.red);
    return {g, plan.red, remainder.edge_list()};
}

std::pair<long, bool> eval_inequality1(const std::vector<int>& cycle_lengths,
                                       const std::vector<int>& path_lengths, int du, int eps) {
    if (du < 0 || (eps != 0 && eps != 1))
        throw InvalidParameter("need d(u) >= 0 and eps in {0,1}");
    long lhs = 3 + eps;
    for (int c : cycle_lengths) {
        if (c < 3) throw InvalidParameter("cycle lengths must be >= 3");
        lhs += 4 * ((c + 2) / 3) - 2 * c;
    }
    for (int p : path_lengths) {
        if (p < 2) throw InvalidParameter("path lengths must be >= 2");
        lhs += 4 * ((p + 2) / 3) - 2 * p - 1;
    }
    return {lhs, lhs >= du};
}

}  // namespace ramsey
