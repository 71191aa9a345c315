#include "ramsey/patterns.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "ramsey/family.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/matching.hpp"

namespace ramsey {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

int lowest(std::uint64_t mask) { return std::countr_zero(mask); }

void validate(const Pattern& p) {
    switch (p.kind) {
        case Pattern::Kind::Cycle:
            if (p.a < 3) throw InvalidParameter("cycle pattern needs length >= 3");
            break;
        case Pattern::Kind::PathPack:
        case Pattern::Kind::CompleteBipartite:
            if (p.a < 1 || p.b < 1) throw InvalidParameter("pattern parameters must be >= 1");
            break;
        case Pattern::Kind::Generic:
            break;
        default:
            if (p.a < 1) throw InvalidParameter("pattern parameter must be >= 1");
    }
}

// --- simple path / cycle search ------------------------------------------

struct PathSearch {
    const Graph& g;
    int want;                 // vertices on the path
    std::uint64_t allowed;
    bool close_cycle = false; // require last vertex adjacent to first
    std::vector<int> path;

    bool dfs(int v, std::uint64_t visited) {
        path.push_back(v);
        if (static_cast<int>(path.size()) == want) {
            if (!close_cycle || g.adjacent(v, path.front())) return true;
        } else {
            std::uint64_t nb = g.row(v) & allowed & ~visited;
            while (nb) {
                int u = lowest(nb);
                nb &= nb - 1;
                if (dfs(u, visited | bit(u))) return true;
            }
        }
        path.pop_back();
        return false;
    }
};

/// A simple path with exactly m vertices inside mask, if any.
std::optional<std::vector<int>> find_path(const Graph& g, int m, std::uint64_t mask) {
    if (m == 1) {
        if (!mask) return std::nullopt;
        return std::vector<int>{lowest(mask)};
    }
    std::uint64_t starts = mask;
    while (starts) {
        int s = lowest(starts);
        starts &= starts - 1;
        PathSearch ps{g, m, mask};
        if (ps.dfs(s, bit(s))) return ps.path;
    }
    return std::nullopt;
}

std::optional<std::vector<int>> find_cycle(const Graph& g, int l, std::uint64_t mask) {
    std::uint64_t starts = mask;
    while (starts) {
        int s = lowest(starts);
        starts &= starts - 1;
        // s is the smallest vertex of the cycle, so only larger ones follow.
        std::uint64_t allowed = mask & ~(bit(s) - 1);
        PathSearch ps{g, l, allowed, true};
        if (ps.dfs(s, bit(s))) return ps.path;
    }
    return std::nullopt;
}

std::vector<Edge> path_edges(const std::vector<int>& path, bool cycle = false) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        edges.emplace_back(path[i], path[i + 1]);
    if (cycle && path.size() >= 3) edges.emplace_back(path.back(), path.front());
    return edges;
}

// --- disjoint path packing -------------------------------------------------

struct PackKey {
    std::uint64_t mask;
    int remaining;
    bool operator==(const PackKey&) const = default;
};
struct PackKeyHash {
    std::size_t operator()(const PackKey& k) const {
        return std::hash<std::uint64_t>{}(k.mask * 1000003u + k.remaining);
    }
};

struct PathPackSearch {
    const Graph& g;
    int m;
    std::unordered_set<PackKey, PackKeyHash> failed;
    std::vector<std::vector<int>> chosen;

    std::uint64_t component_of(int s, std::uint64_t mask) const {
        std::uint64_t comp = bit(s), frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            while (frontier) {
                int w = lowest(frontier);
                frontier &= frontier - 1;
                next |= g.row(w) & mask & ~comp;
            }
            comp |= next;
            frontier = next;
        }
        return comp;
    }

    bool capacity_ok(std::uint64_t mask, int remaining) const {
        int cap = 0;
        std::uint64_t todo = mask;
        while (todo) {
            std::uint64_t comp = component_of(lowest(todo), mask);
            todo &= ~comp;
            cap += std::popcount(comp) / m;
            if (cap >= remaining) return true;
        }
        return cap >= remaining;
    }

    /// Enumerates P_m placements inside comp, recursing on each.
    bool place_in(std::uint64_t comp, std::uint64_t mask, int remaining,
                  std::vector<int>& path, int v, std::uint64_t visited) {
        path.push_back(v);
        if (static_cast<int>(path.size()) == m) {
            bool ok = m == 1 || path.front() < path.back();  // skip the reversal
            if (ok) {
                chosen.push_back(path);
                std::uint64_t used = 0;
                for (int w : path) used |= bit(w);
                if (solve(mask & ~used, remaining - 1)) return true;
                chosen.pop_back();
            }
        } else {
            std::uint64_t nb = g.row(v) & comp & ~visited;
            while (nb) {
                int u = lowest(nb);
                nb &= nb - 1;
                if (place_in(comp, mask, remaining, path, u, visited | bit(u))) return true;
            }
        }
        path.pop_back();
        return false;
    }

    bool solve(std::uint64_t mask, int remaining) {
        if (remaining == 0) return true;
        PackKey key{mask, remaining};
        if (failed.count(key)) return false;
        if (capacity_ok(mask, remaining)) {
            // Either some paths lie in the first component, or none do.
            std::uint64_t comp = component_of(lowest(mask), mask);
            std::uint64_t starts = comp;
            while (starts) {
                int s = lowest(starts);
                starts &= starts - 1;
                std::vector<int> path;
                if (place_in(comp, mask, remaining, path, s, bit(s))) return true;
            }
            if (solve(mask & ~comp, remaining)) return true;
        }
        failed.insert(key);
        return false;
    }
};

// --- cliques ----------------------------------------------------------------

bool clique_dfs(const Graph& g, int k, std::uint64_t cand, std::vector<int>& cur) {
    if (static_cast<int>(cur.size()) == k) return true;
    while (cand) {
        if (static_cast<int>(cur.size()) + std::popcount(cand) < k) return false;
        int v = lowest(cand);
        cand &= cand - 1;
        cur.push_back(v);
        if (clique_dfs(g, k, cand & g.row(v), cur)) return true;
        cur.pop_back();
    }
    return false;
}

// --- complete bipartite -----------------------------------------------------

bool biclique_dfs(const Graph& g, int a, int b, int from, std::uint64_t common,
                  std::vector<int>& part_a, std::uint64_t chosen, std::uint64_t* out_b) {
    if (static_cast<int>(part_a.size()) == a) {
        std::uint64_t side_b = common & ~chosen;
        if (std::popcount(side_b) >= b) {
            *out_b = side_b;
            return true;
        }
        return false;
    }
    for (int v = from; v < g.order(); ++v) {
        std::uint64_t next = part_a.empty() ? g.row(v) : (common & g.row(v));
        if (std::popcount(next & ~(chosen | bit(v))) < b) continue;
        part_a.push_back(v);
        if (biclique_dfs(g, a, b, v + 1, next, part_a, chosen | bit(v), out_b)) return true;
        part_a.pop_back();
    }
    return false;
}

Witness make_witness(std::vector<int> vertices, std::vector<Edge> edges) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return {std::move(vertices), std::move(edges)};
}

}  // namespace

std::string Pattern::name() const {
    switch (kind) {
        case Kind::Fan: return "F" + std::to_string(a);
        case Kind::Path: return "P" + std::to_string(a);
        case Kind::PathPack: return std::to_string(a) + "P" + std::to_string(b);
        case Kind::Cycle: return "C" + std::to_string(a);
        case Kind::Clique: return "K" + std::to_string(a);
        case Kind::Star: return "S" + std::to_string(a);
        case Kind::Matching: return std::to_string(a) + "K2";
        case Kind::CompleteBipartite:
            return "K" + std::to_string(a) + "," + std::to_string(b);
        case Kind::Generic: return "g6:" + write_graph6(graph);
    }
    return "?";
}

Graph Pattern::to_graph() const {
    switch (kind) {
        case Kind::Fan: return build(FamilySpec::fan(a));
        case Kind::Path: return a == 1 ? Graph(1) : build(FamilySpec::path(a));
        case Kind::PathPack:
            return b == 1 ? Graph(a) : build(FamilySpec::path_union(a, b));
        case Kind::Cycle: return build(FamilySpec::cycle(a));
        case Kind::Clique: return a == 1 ? Graph(1) : build(FamilySpec::clique(a));
        case Kind::Star: return build(FamilySpec::star(a));
        case Kind::Matching: return build(FamilySpec::matching(a));
        case Kind::CompleteBipartite: return build(FamilySpec::complete_bipartite(a, b));
        case Kind::Generic: return graph;
    }
    throw InvalidParameter("unknown pattern kind");
}

int Pattern::edge_count() const { return to_graph().size(); }

std::optional<Witness> contains(const Graph& g, const Pattern& p) {
    validate(p);
    const std::uint64_t all = g.full_mask();
    switch (p.kind) {
        case Pattern::Kind::Matching: {
            Matcher matcher(g);
            if (matcher.number(all) < p.a) return std::nullopt;
            auto edges = matcher.matching(all);
            edges.resize(p.a);
            std::vector<int> verts;
            for (auto [u, v] : edges) {
                verts.push_back(u);
                verts.push_back(v);
            }
            return make_witness(std::move(verts), std::move(edges));
        }
        case Pattern::Kind::Fan: {
            Matcher matcher(g);
            for (int v = 0; v < g.order(); ++v) {
                if (g.degree(v) < 2 * p.a) continue;
                if (matcher.number(g.row(v)) < p.a) continue;
                auto rim = matcher.matching(g.row(v));
                rim.resize(p.a);
                std::vector<int> verts{v};
                std::vector<Edge> edges;
                for (auto [x, y] : rim) {
                    verts.push_back(x);
                    verts.push_back(y);
                    edges.emplace_back(x, y);
                    edges.emplace_back(v, x);
                    edges.emplace_back(v, y);
                }
                return make_witness(std::move(verts), std::move(edges));
            }
            return std::nullopt;
        }
        case Pattern::Kind::Star: {
            for (int v = 0; v < g.order(); ++v) {
                if (g.degree(v) < p.a) continue;
                std::vector<int> verts{v};
                std::vector<Edge> edges;
                std::uint64_t nb = g.row(v);
                for (int i = 0; i < p.a; ++i) {
                    int u = lowest(nb);
                    nb &= nb - 1;
                    verts.push_back(u);
                    edges.emplace_back(v, u);
                }
                return make_witness(std::move(verts), std::move(edges));
            }
            return std::nullopt;
        }
        case Pattern::Kind::Path: {
            auto path = find_path(g, p.a, all);
            if (!path) return std::nullopt;
            return make_witness(*path, path_edges(*path));
        }
        case Pattern::Kind::Cycle: {
            auto cyc = find_cycle(g, p.a, all);
            if (!cyc) return std::nullopt;
            return make_witness(*cyc, path_edges(*cyc, true));
        }
        case Pattern::Kind::PathPack: {
            if (p.b == 1) {
                if (g.order() < p.a) return std::nullopt;
                std::vector<int> verts(p.a);
                for (int i = 0; i < p.a; ++i) verts[i] = i;
                return make_witness(std::move(verts), {});
            }
            PathPackSearch search{g, p.b};
            if (!search.solve(all, p.a)) return std::nullopt;
            std::vector<int> verts;
            std::vector<Edge> edges;
            for (const auto& path : search.chosen) {
                verts.insert(verts.end(), path.begin(), path.end());
                auto pe = path_edges(path);
                edges.insert(edges.end(), pe.begin(), pe.end());
            }
            return make_witness(std::move(verts), std::move(edges));
        }
        case Pattern::Kind::Clique: {
            if (p.a == 1)
                return g.order() >= 1 ? std::optional<Witness>(Witness{{0}, {}}) : std::nullopt;
            std::vector<int> cur;
            if (!clique_dfs(g, p.a, all, cur)) return std::nullopt;
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < cur.size(); ++i)
                for (std::size_t j = i + 1; j < cur.size(); ++j)
                    edges.emplace_back(cur[i], cur[j]);
            return make_witness(std::move(cur), std::move(edges));
        }
        case Pattern::Kind::CompleteBipartite: {
            const int a = std::min(p.a, p.b), b = std::max(p.a, p.b);
            std::vector<int> part_a;
            std::uint64_t side_b = 0;
            if (!biclique_dfs(g, a, b, 0, 0, part_a, 0, &side_b)) return std::nullopt;
            std::vector<int> verts = part_a;
            std::vector<Edge> edges;
            int taken = 0;
            std::uint64_t nb = side_b;
            while (nb && taken < b) {
                int u = lowest(nb);
                nb &= nb - 1;
                verts.push_back(u);
                for (int x : part_a) edges.emplace_back(x, u);
                ++taken;
            }
            return make_witness(std::move(verts), std::move(edges));
        }
        case Pattern::Kind::Generic:
            return subgraph_iso(g, p.graph);
    }
    return std::nullopt;
}

std::pair<int, int> max_fan(const Graph& g) {
    Matcher matcher(g);
    int best = 0, center = -1;
    for (int v = 0; v < g.order(); ++v) {
        int nu = matcher.number(g.row(v));
        if (nu > best) {
            best = nu;
            center = v;
        }
    }
    return {best, center};
}

std::optional<Witness> subgraph_iso(const Graph& host, const Graph& pattern) {
    const int pn = pattern.order();
    if (pn > host.order() || pattern.size() > host.size()) return std::nullopt;

    // Order pattern vertices to keep the partial map connected.
    std::vector<int> order;
    std::vector<bool> taken(pn, false);
    for (int step = 0; step < pn; ++step) {
        int pick = -1, pick_conn = -1, pick_deg = -1;
        for (int v = 0; v < pn; ++v) {
            if (taken[v]) continue;
            int conn = 0;
            for (int u : order)
                if (pattern.adjacent(u, v)) ++conn;
            int deg = pattern.degree(v);
            if (conn > pick_conn || (conn == pick_conn && deg > pick_deg)) {
                pick = v;
                pick_conn = conn;
                pick_deg = deg;
            }
        }
        taken[pick] = true;
        order.push_back(pick);
    }

    std::vector<int> map(pn, -1);
    std::uint64_t used = 0;

    auto backtrack = [&](auto&& self, int i) -> bool {
        if (i == pn) return true;
        const int pv = order[i];
        std::uint64_t cands = host.full_mask() & ~used;
        for (int j = 0; j < i; ++j) {
            const int q = order[j];
            if (pattern.adjacent(pv, q)) cands &= host.row(map[q]);
        }
        while (cands) {
            int v = lowest(cands);
            cands &= cands - 1;
            if (host.degree(v) < pattern.degree(pv)) continue;
            map[pv] = v;
            used |= bit(v);
            if (self(self, i + 1)) return true;
            used &= ~bit(v);
            map[pv] = -1;
        }
        return false;
    };
    if (!backtrack(backtrack, 0)) return std::nullopt;

    std::vector<int> verts;
    for (int v = 0; v < pn; ++v) verts.push_back(map[v]);
    std::vector<Edge> edges;
    for (auto [u, v] : pattern.edge_list()) edges.emplace_back(map[u], map[v]);
    return make_witness(std::move(verts), std::move(edges));
}

Pattern parse_pattern(const std::string& text) {
    if (text.rfind("g6:", 0) == 0) return Pattern::generic(parse_graph6(text.substr(3)));
    FamilySpec spec = parse_family(text);
    using FK = FamilySpec::Kind;
    switch (spec.kind) {
        case FK::Fan: return Pattern::fan(spec.a);
        case FK::Path: return Pattern::path(spec.a);
        case FK::PathUnion: return Pattern::path_pack(spec.a, spec.b);
        case FK::Cycle: return Pattern::cycle(spec.a);
        case FK::Clique: return Pattern::clique(spec.a);
        case FK::Star: return Pattern::star(spec.a);
        case FK::Matching: return Pattern::matching(spec.a);
        case FK::CompleteBipartite: return Pattern::complete_bipartite(spec.a, spec.b);
        default: return Pattern::generic(build(spec));
    }
}

}  // namespace ramsey
