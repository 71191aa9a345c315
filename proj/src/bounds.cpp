#include "ramsey/bounds.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "ramsey/canonical.hpp"
#include "ramsey/family.hpp"
#include "ramsey/graph6.hpp"

namespace ramsey {

namespace {

// --- pattern normalization ---------------------------------------------------

/// nK2, including the degenerate spellings of a single edge.
std::optional<int> as_matching(const Pattern& p) {
    switch (p.kind) {
        case Pattern::Kind::Matching: return p.a;
        case Pattern::Kind::Path: return p.a == 2 ? std::optional<int>(1) : std::nullopt;
        case Pattern::Kind::Clique: return p.a == 2 ? std::optional<int>(1) : std::nullopt;
        case Pattern::Kind::PathPack: return p.b == 2 ? std::optional<int>(p.a) : std::nullopt;
        case Pattern::Kind::Star: return p.a == 1 ? std::optional<int>(1) : std::nullopt;
        default: return std::nullopt;
    }
}

bool is_p3(const Pattern& p) {
    return (p.kind == Pattern::Kind::Path && p.a == 3) ||
           (p.kind == Pattern::Kind::PathPack && p.a == 1 && p.b == 3) ||
           (p.kind == Pattern::Kind::Star && p.a == 2) ||
           (p.kind == Pattern::Kind::CompleteBipartite &&
            std::min(p.a, p.b) == 1 && std::max(p.a, p.b) == 2);
}

std::optional<int> as_fan(const Pattern& p) {
    if (p.kind == Pattern::Kind::Fan) return p.a;
    if (p.kind == Pattern::Kind::Clique && p.a == 3) return 1;
    if (p.kind == Pattern::Kind::Cycle && p.a == 3) return 1;
    return std::nullopt;
}

std::optional<int> as_clique(const Pattern& p) {
    if (p.kind == Pattern::Kind::Clique) return p.a;
    if (p.kind == Pattern::Kind::Fan && p.a == 1) return 3;
    if (p.kind == Pattern::Kind::Cycle && p.a == 3) return 3;
    return std::nullopt;
}

std::optional<int> as_star(const Pattern& p) {
    if (p.kind == Pattern::Kind::Star) return p.a;
    if (p.kind == Pattern::Kind::CompleteBipartite && std::min(p.a, p.b) == 1)
        return std::max(p.a, p.b);
    return std::nullopt;
}

std::optional<std::pair<int, int>> as_path_pack(const Pattern& p) {
    if (p.kind == Pattern::Kind::PathPack) return std::make_pair(p.a, p.b);
    if (p.kind == Pattern::Kind::Path) return std::make_pair(1, p.a);
    return std::nullopt;
}

std::optional<std::pair<int, int>> as_complete_bipartite(const Pattern& p) {
    if (p.kind == Pattern::Kind::CompleteBipartite)
        return std::make_pair(std::min(p.a, p.b), std::max(p.a, p.b));
    return std::nullopt;
}

// --- formula registry --------------------------------------------------------

std::optional<long> predicted_oriented(const Pattern& red, const Pattern& blue) {
    if (is_p3(red)) {
        if (auto k = as_clique(blue); k && *k >= 2)  // Faudree-Sheehan
            return 2L * (*k - 1) * (*k - 1);
        if (auto n = as_fan(blue)) {
            if (*n == 1) return 8;
            if (*n == 2) return 10;
            return *n % 2 == 1 ? 4L * *n + 4 : 4L * *n + 5;
        }
    }
    if (auto r = as_matching(red)) {
        const int n1 = *r;
        if (n1 == 2) {
            if (auto m = as_clique(blue); m && *m >= 2)  // Erdos-Faudree
                return *m >= 6 ? static_cast<long>(*m + 2) * (*m + 1) / 2
                               : static_cast<long>(*m) * (*m - 1);
            if (auto mn = as_complete_bipartite(blue); mn && mn->first >= 2)
                return static_cast<long>(mn->first) * mn->second + mn->first + mn->second;
            if (auto n = as_fan(blue))
                return *n <= 2 ? 6L * *n : 5L * *n + 3;
            if (auto nm = as_path_pack(blue); nm && nm->second >= 2) {
                const long n = nm->first, m = nm->second;
                return std::min(n * m + 1, (n + 1) * (m - 1));
            }
        }
        if (auto n2 = as_matching(blue)) return static_cast<long>(n1) + *n2 - 1;
        if (auto m = as_star(blue)) return static_cast<long>(*m) * n1;  // Erdos-Faudree
        if (auto nm = as_path_pack(blue); nm && nm->first == 1) {
            if (nm->second == 3) return 2L * n1;           // P3 is K_{1,2}
            if (nm->second == 4) return (5L * n1 + 1) / 2; // ceil(5n/2)
            if (nm->second == 5) return 3L * n1 + (n1 % 2);
        }
    }
    return std::nullopt;
}

std::optional<Graph> witness_oriented(const Pattern& red, const Pattern& blue) {
    if (is_p3(red)) {
        if (auto n = as_fan(blue)) {
            if (*n == 2) return std::nullopt;  // value known, construction is not
            if (*n % 2 == 1) return build(FamilySpec::k1_plus_nc4((*n + 1) / 2));
            return build(FamilySpec::k1_plus_nc4_p3(*n / 2));
        }
        return std::nullopt;
    }
    if (auto r = as_matching(red)) {
        const int n1 = *r;
        if (n1 == 2) {
            if (auto n = as_fan(blue)) {
                if (*n == 1)
                    return build(FamilySpec::disjoint_union(
                        {FamilySpec::clique(3), FamilySpec::clique(3)}));
                if (*n == 2) return build(FamilySpec::two_f2());
                return build(FamilySpec::h_graph(*n));
            }
            if (auto m = as_clique(blue); m && *m >= 2) {
                if (*m >= 6) return build(FamilySpec::clique(*m + 2));
                return build(FamilySpec::disjoint_union(
                    std::vector<FamilySpec>(2, FamilySpec::clique(*m))));
            }
            if (auto nm = as_path_pack(blue); nm && nm->second >= 3) {
                const long n = nm->first, m = nm->second;
                if (n * m + 1 <= (n + 1) * (m - 1))
                    return build(FamilySpec::cycle(static_cast<int>(n * m + 1)));
                return build(FamilySpec::path_union(static_cast<int>(n + 1),
                                                    static_cast<int>(m)));
            }
        }
        if (auto n2 = as_matching(blue)) return build(FamilySpec::matching(n1 + *n2 - 1));
        if (auto m = as_star(blue))
            return build(FamilySpec::disjoint_union(
                std::vector<FamilySpec>(n1, FamilySpec::star(*m))));
    }
    return std::nullopt;
}

}  // namespace

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) break;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    const int nthreads = std::min<std::size_t>(threads, count);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

std::optional<long> predicted(const Pattern& red, const Pattern& blue) {
    if (auto v = predicted_oriented(red, blue)) return v;
    return predicted_oriented(blue, red);
}

std::optional<Graph> witness_for(const Pattern& red, const Pattern& blue) {
    if (auto w = witness_oriented(red, blue)) return w;
    return std::nullopt;
}

ArrowVerdict verify_upper(const Pattern& red, const Pattern& blue, const ArrowOptions& opts) {
    auto witness = witness_for(red, blue);
    if (!witness)
        throw InvalidParameter("no witness construction registered for (" + red.name() + ", " +
                               blue.name() + ")");
    return arrows(*witness, red, blue, opts);
}

ExhaustionRecord verify_lower(const Pattern& red, const Pattern& blue, int q,
                              const EnumerationTask& base, int threads,
                              const CertificateSink& sink) {
    EnumerationTask task = base;
    task.edge_count = q;
    const auto graphs = graphs_with_edges(task);

    std::vector<ArrowVerdict> verdicts(graphs.size());
    parallel_for(graphs.size(), threads,
                 [&](std::size_t i) { verdicts[i] = arrows(graphs[i], red, blue); });

    ExhaustionRecord record;
    record.q = q;
    record.examined = graphs.size();
    record.all_nonarrowing = true;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (verdicts[i].arrows) {
            record.all_nonarrowing = false;
            record.refuted_g6 = write_graph6(graphs[i]);
            break;
        }
        if (sink) sink(write_graph6(graphs[i]), *verdicts[i].certificate);
    }
    return record;
}

RamseyReport size_ramsey(const Pattern& red, const Pattern& blue, int budget_edges,
                         int threads) {
    const auto start = std::chrono::steady_clock::now();
    RamseyReport report;
    report.red = red.name();
    report.blue = blue.name();
    report.predicted = predicted(red, blue);

    Enumerator enumerator(budget_edges);
    for (int q = 1; q <= budget_edges; ++q) {
        const auto& level = enumerator.level(q);
        std::vector<Graph> graphs;
        graphs.reserve(level.size());
        for (const auto& s : level) graphs.push_back(parse_graph6(s));

        std::vector<char> hits(graphs.size(), 0);
        std::vector<std::uint64_t> avoiders(graphs.size(), 0);
        parallel_for(graphs.size(), threads, [&](std::size_t i) {
            auto v = arrows(graphs[i], red, blue);
            hits[i] = v.arrows ? 1 : 0;
            avoiders[i] = v.avoiders_examined;
        });

        ExhaustionRecord record;
        record.q = q;
        record.examined = graphs.size();
        auto hit = std::find(hits.begin(), hits.end(), 1);
        if (hit != hits.end()) {
            const std::size_t i = hit - hits.begin();
            record.all_nonarrowing = false;
            record.refuted_g6 = level[i];
            report.sweeps.push_back(record);
            report.status = "exact";
            report.value = q;
            report.lower = q;
            report.upper = q;
            report.witness_g6 = level[i];
            report.witness_avoiders = avoiders[i];
            report.formula_consistent = !report.predicted || *report.predicted == q;
            report.elapsed_s =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return report;
        }
        record.all_nonarrowing = true;
        report.sweeps.push_back(record);
        report.lower = q + 1;
    }

    report.status = "bounds";
    if (auto witness = witness_for(red, blue)) {
        auto verdict = arrows(*witness, red, blue);
        if (verdict.arrows) {
            report.upper = witness->size();
            report.witness_g6 = write_graph6(*witness);
            report.witness_avoiders = verdict.avoiders_examined;
        }
    }
    if (report.upper && report.lower == *report.upper) {
        // The interval closed without enumerating the top level.
        report.status = "exact";
        report.value = report.lower;
    }
    report.formula_consistent =
        !report.predicted ||
        (*report.predicted >= report.lower &&
         (!report.upper || *report.predicted <= *report.upper));
    report.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

PackSweepRecord connected_pack_sweep(int n, int m, int threads, const CertificateSink& sink) {
    if (n < 1 || m < 3) throw InvalidParameter("pack sweep needs n >= 1 and m >= 3");
    const Pattern red = Pattern::matching(2);
    const Pattern blue = Pattern::path_pack(n, m);

    EnumerationTask task;
    task.edge_count = n * m;
    task.connected_only = true;
    const auto graphs = graphs_with_edges(task);

    std::vector<ArrowVerdict> verdicts(graphs.size());
    parallel_for(graphs.size(), threads,
                 [&](std::size_t i) { verdicts[i] = arrows(graphs[i], red, blue); });

    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (verdicts[i].arrows)
            throw SweepViolation("connected graph with nm edges arrows (2K2, nPm): " +
                                write_graph6(graphs[i]));
        if (!check_coloring(*verdicts[i].certificate, red, blue))
            throw SweepViolation("certificate failed re-validation");
        if (sink) sink(write_graph6(graphs[i]), *verdicts[i].certificate);
    }
    return {n, m, n * m, graphs.size(), true};
}

}  // namespace ramsey
