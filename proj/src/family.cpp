#include "ramsey/family.hpp"

#include <cctype>

namespace ramsey {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidParameter(what);
}

Graph sized(int n) {
    if (n > kMaxVertices)
        throw CapacityExceeded("family would need " + std::to_string(n) + " vertices");
    return Graph(n);
}

/// Disjoint union: appends other's vertices after g's.
void append(Graph& g, const Graph& other) {
    const int base = g.order();
    if (base + other.order() > kMaxVertices)
        throw CapacityExceeded("disjoint union exceeds 64 vertices");
    for (int i = 0; i < other.order(); ++i) g.add_vertex();
    for (auto [u, v] : other.edge_list()) g.add_edge(base + u, base + v);
}

Graph build_path(int m) {
    require(m >= 2, "path needs at least 2 vertices");
    Graph g = sized(m);
    for (int i = 0; i + 1 < m; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph build_cycle(int n) {
    require(n >= 3, "cycle length must be at least 3");
    Graph g = sized(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph build_clique(int n) {
    require(n >= 2, "clique needs at least 2 vertices");
    Graph g = sized(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph build_star(int k) {
    require(k >= 1, "star needs at least 1 edge");
    Graph g = sized(k + 1);
    for (int i = 0; i < k; ++i) g.add_edge(i, k);
    return g;
}

Graph build_matching(int n) {
    require(n >= 1, "matching needs at least 1 edge");
    Graph g = sized(2 * n);
    for (int i = 0; i < n; ++i) g.add_edge(2 * i, 2 * i + 1);
    return g;
}

Graph build_fan(int n) {
    require(n >= 1, "fan parameter must be at least 1");
    Graph g = sized(2 * n + 1);
    const int center = 2 * n;
    for (int i = 0; i < n; ++i) {
        g.add_edge(2 * i, 2 * i + 1);
        g.add_edge(center, 2 * i);
        g.add_edge(center, 2 * i + 1);
    }
    return g;
}

Graph build_wheel(int n) {
    require(n >= 3, "wheel rim must be a cycle of length at least 3");
    Graph g = sized(n + 1);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(n, i);
    }
    return g;
}

Graph build_complete_bipartite(int m, int n) {
    require(m >= 1 && n >= 1, "bipartite part sizes must be at least 1");
    Graph g = sized(m + n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) g.add_edge(i, m + j);
    return g;
}

Graph build_k1_plus_nc4(int n) {
    require(n >= 1, "K1+nC4 needs n >= 1");
    Graph g = sized(4 * n + 1);
    const int center = 4 * n;
    for (int i = 0; i < n; ++i) {
        const int base = 4 * i;
        for (int j = 0; j < 4; ++j) {
            g.add_edge(base + j, base + (j + 1) % 4);
            g.add_edge(center, base + j);
        }
    }
    return g;
}

Graph build_k1_plus_nc4_p3(int n) {
    require(n >= 1, "K1+(nC4 u P3) needs n >= 1");
    Graph g = sized(4 * n + 4);
    const int center = 4 * n + 3;
    for (int i = 0; i < n; ++i) {
        const int base = 4 * i;
        for (int j = 0; j < 4; ++j) {
            g.add_edge(base + j, base + (j + 1) % 4);
            g.add_edge(center, base + j);
        }
    }
    g.add_edge(4 * n, 4 * n + 1);
    g.add_edge(4 * n + 1, 4 * n + 2);
    for (int j = 0; j < 3; ++j) g.add_edge(center, 4 * n + j);
    return g;
}

/// Rim matching 0..2n-1, fan centers u = 2n and v = 2n+1 joined to every rim
/// vertex, pendant triangle u, u1 = 2n+2, u2 = 2n+3. Size 5n+3.
Graph build_h_graph(int n) {
    require(n >= 1, "H graph needs n >= 1");
    Graph g = sized(2 * n + 4);
    const int u = 2 * n, v = 2 * n + 1, u1 = 2 * n + 2, u2 = 2 * n + 3;
    for (int i = 0; i < n; ++i) {
        g.add_edge(2 * i, 2 * i + 1);
        g.add_edge(u, 2 * i);
        g.add_edge(u, 2 * i + 1);
        g.add_edge(v, 2 * i);
        g.add_edge(v, 2 * i + 1);
    }
    g.add_edge(u1, u2);
    g.add_edge(u, u1);
    g.add_edge(u, u2);
    return g;
}

}  // namespace

Graph build(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    switch (spec.kind) {
        case Kind::Path: return build_path(spec.a);
        case Kind::Cycle: return build_cycle(spec.a);
        case Kind::Clique: return build_clique(spec.a);
        case Kind::Star: return build_star(spec.a);
        case Kind::Matching: return build_matching(spec.a);
        case Kind::Fan: return build_fan(spec.a);
        case Kind::Wheel: return build_wheel(spec.a);
        case Kind::CompleteBipartite: return build_complete_bipartite(spec.a, spec.b);
        case Kind::PathUnion: {
            require(spec.a >= 1, "path union needs n >= 1");
            Graph g(0);
            for (int i = 0; i < spec.a; ++i) append(g, build_path(spec.b));
            return g;
        }
        case Kind::K1PlusNC4: return build_k1_plus_nc4(spec.a);
        case Kind::K1PlusNC4P3: return build_k1_plus_nc4_p3(spec.a);
        case Kind::HGraph: return build_h_graph(spec.a);
        case Kind::TwoF2: {
            Graph g(0);
            append(g, build_fan(2));
            append(g, build_fan(2));
            return g;
        }
        case Kind::DisjointUnion: {
            require(!spec.parts.empty(), "disjoint union needs at least one part");
            Graph g(0);
            for (const auto& part : spec.parts) append(g, build(part));
            return g;
        }
        case Kind::JoinOne: {
            require(spec.parts.size() == 1, "join expects one inner graph");
            Graph g = build(spec.parts[0]);
            if (g.order() >= kMaxVertices)
                throw CapacityExceeded("join center would exceed 64 vertices");
            const int center = g.add_vertex();
            for (int i = 0; i < center; ++i) g.add_edge(center, i);
            return g;
        }
    }
    throw InvalidParameter("unknown family kind");
}

FamilySpec parse_family(const std::string& text) {
    std::size_t pos = 0;
    auto fail = [&]() -> FamilySpec {
        throw InvalidParameter("cannot parse family: " + text);
    };
    auto number = [&]() -> int {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail();
        return std::stoi(text.substr(start, pos - start));
    };

    int multiplier = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        multiplier = number();

    FamilySpec base{FamilySpec::Kind::Path};
    if (text.compare(pos, 3, "K1+") == 0) {
        pos += 3;
        int n = number();
        if (text.compare(pos, 2, "C4") != 0) fail();
        pos += 2;
        if (pos == text.size()) {
            base = FamilySpec::k1_plus_nc4(n);
        } else if (text.compare(pos, 3, "+P3") == 0) {
            pos += 3;
            base = FamilySpec::k1_plus_nc4_p3(n);
        } else {
            fail();
        }
    } else if (pos < text.size()) {
        const char tag = text[pos++];
        switch (tag) {
            case 'H': base = FamilySpec::h_graph(number()); break;
            case 'F': base = FamilySpec::fan(number()); break;
            case 'W': base = FamilySpec::wheel(number()); break;
            case 'P': base = FamilySpec::path(number()); break;
            case 'C': base = FamilySpec::cycle(number()); break;
            case 'S': base = FamilySpec::star(number()); break;
            case 'K': {
                int m = number();
                if (pos < text.size() && text[pos] == ',') {
                    ++pos;
                    base = FamilySpec::complete_bipartite(m, number());
                } else if (m == 2) {
                    // nK2 reads as a matching with n edges.
                    base = multiplier > 1 ? FamilySpec::matching(multiplier)
                                          : FamilySpec::matching(1);
                    multiplier = 1;
                } else {
                    base = FamilySpec::clique(m);
                }
                break;
            }
            default: fail();
        }
    } else {
        fail();
    }
    if (pos != text.size()) fail();

    if (multiplier < 1) fail();
    if (multiplier == 1) return base;
    // nPm keeps its structured form so pattern detection can use it.
    if (base.kind == FamilySpec::Kind::Path)
        return FamilySpec::path_union(multiplier, base.a);
    return FamilySpec::disjoint_union(std::vector<FamilySpec>(multiplier, base));
}

}  // namespace ramsey
