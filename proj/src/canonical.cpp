#include "ramsey/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "ramsey/graph6.hpp"

namespace ramsey {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

/// Iterated neighbor-color refinement. Colors are dense ranks assigned in
/// sorted signature order, so they are label-invariant.
std::vector<int> refine_colors(int m, const std::array<std::uint64_t, 64>& adj) {
    std::vector<int> color(m);
    for (int v = 0; v < m; ++v) color[v] = std::popcount(adj[v]);
    int ncolors = -1;
    for (int round = 0; round < m; ++round) {
        std::map<std::vector<int>, int> rank;
        std::vector<std::vector<int>> sig(m);
        for (int v = 0; v < m; ++v) {
            sig[v].push_back(color[v]);
            std::vector<int> nb;
            std::uint64_t row = adj[v];
            while (row) {
                int u = std::countr_zero(row);
                row &= row - 1;
                nb.push_back(color[u]);
            }
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
            rank[sig[v]] = 0;
        }
        int next = 0;
        for (auto& [s, r] : rank) r = next++;
        for (int v = 0; v < m; ++v) color[v] = rank[sig[v]];
        if (next == ncolors) break;
        ncolors = next;
    }
    return color;
}

/// Canonical labeling of one connected component by lexicographically
/// maximizing the sequence of adjacency rows against the placed prefix.
/// At each position only vertices attaining the maximal prefix row can lie
/// on a maximal labeling, and twin vertices (swappable by an automorphism)
/// are explored once.
struct ComponentCanon {
    int m = 0;
    std::array<std::uint64_t, 64> adj{};
    std::vector<int> root_cell;
    std::array<int, 64> pos{};
    std::array<std::uint64_t, 64> rows{}, best{};
    std::array<int, 64> best_perm{};
    bool have_best = false;

    void run() {
        dfs(0, 0);
    }

    void dfs(int i, std::uint64_t placed) {
        if (i == m) {
            if (!have_best ||
                std::lexicographical_compare(best.begin(), best.begin() + m,
                                             rows.begin(), rows.begin() + m)) {
                best = rows;
                std::copy(pos.begin(), pos.begin() + m, best_perm.begin());
                have_best = true;
            }
            return;
        }
        int cmp = 0;  // prefix vs best: 0 equal, 1 greater
        if (have_best) {
            for (int j = 0; j < i; ++j) {
                if (rows[j] != best[j]) {
                    cmp = rows[j] > best[j] ? 1 : -1;
                    break;
                }
            }
            if (cmp < 0) return;  // best advanced while we were in a sibling
        }

        std::uint64_t rmax = 0;
        std::vector<int> cands;
        auto consider = [&](int v) {
            std::uint64_t r = 0;
            for (int j = 0; j < i; ++j)
                if ((adj[v] >> pos[j]) & 1u) r |= bit(63 - j);
            if (cands.empty() || r > rmax) {
                rmax = r;
                cands.clear();
                cands.push_back(v);
            } else if (r == rmax) {
                cands.push_back(v);
            }
        };
        if (i == 0) {
            for (int v : root_cell) consider(v);
        } else {
            for (int v = 0; v < m; ++v)
                if (!((placed >> v) & 1u)) consider(v);
        }
        if (have_best && cmp == 0) {
            if (rmax < best[i]) return;
            if (rmax > best[i]) cmp = 1;
        }

        // Drop all but one of each twin class.
        std::vector<int> keep;
        for (int v : cands) {
            bool dup = false;
            for (int w : keep) {
                std::uint64_t excl = ~(bit(v) | bit(w));
                if ((adj[v] & excl) == (adj[w] & excl)) {
                    dup = true;
                    break;
                }
            }
            if (!dup) keep.push_back(v);
        }
        for (int v : keep) {
            pos[i] = v;
            rows[i] = rmax;
            dfs(i + 1, placed | bit(v));
        }
    }
};

struct CanonComponent {
    int m;
    std::vector<std::uint64_t> key;
    std::vector<int> orig;  // orig[i] = original vertex at canonical position i
};

CanonComponent canonicalize_component(const Graph& g, std::uint64_t mask) {
    std::vector<int> verts;
    for (int v = 0; v < g.order(); ++v)
        if ((mask >> v) & 1u) verts.push_back(v);
    const int m = static_cast<int>(verts.size());

    ComponentCanon cc;
    cc.m = m;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (g.adjacent(verts[i], verts[j])) {
                cc.adj[i] |= bit(j);
                cc.adj[j] |= bit(i);
            }
        }
    }

    std::vector<int> color = refine_colors(m, cc.adj);
    // Root candidates: the cell with the fewest vertices (ties by color id).
    std::map<int, std::vector<int>> cells;
    for (int v = 0; v < m; ++v) cells[color[v]].push_back(v);
    const std::vector<int>* root = nullptr;
    for (auto& [c, members] : cells)
        if (!root || members.size() < root->size()) root = &members;
    cc.root_cell = *root;

    cc.run();

    CanonComponent out;
    out.m = m;
    out.key.assign(cc.best.begin(), cc.best.begin() + m);
    out.orig.resize(m);
    for (int i = 0; i < m; ++i) out.orig[i] = verts[cc.best_perm[i]];
    return out;
}

}  // namespace

Graph canonical_graph(const Graph& g) {
    std::vector<CanonComponent> comps;
    for (std::uint64_t mask : g.component_masks())
        comps.push_back(canonicalize_component(g, mask));
    // Larger components first, then by canonical key; isolated vertices
    // (singleton components) end up last.
    std::sort(comps.begin(), comps.end(), [](const CanonComponent& a, const CanonComponent& b) {
        if (a.m != b.m) return a.m > b.m;
        return a.key > b.key;
    });
    std::vector<int> perm;
    perm.reserve(g.order());
    for (const auto& c : comps) perm.insert(perm.end(), c.orig.begin(), c.orig.end());
    return g.relabeled(perm);
}

std::string canonical_form(const Graph& g) {
    return write_graph6(canonical_graph(g));
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace ramsey
