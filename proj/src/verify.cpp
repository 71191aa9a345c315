#include "ramsey/verify.hpp"

#include <sstream>

#include "ramsey/arrowing.hpp"
#include "ramsey/bounds.hpp"
#include "ramsey/family.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/matching.hpp"

namespace ramsey {

namespace {

struct Suite {
    const VerifyOptions& opts;
    std::vector<CheckResult> results;

    void add(const std::string& id, const std::string& name, bool pass,
             const std::string& details) {
        results.push_back({id, name, pass, details});
    }

    void run_guarded(const std::string& id, const std::string& name,
                     const std::function<std::pair<bool, std::string>()>& body) {
        try {
            auto [pass, details] = body();
            add(id, name, pass, details);
        } catch (const std::exception& e) {
            add(id, name, false, std::string("exception: ") + e.what());
        }
    }

    void check_witness(const std::string& id, const Graph& host, const Pattern& red,
                       const Pattern& blue) {
        run_guarded(id, write_graph6(host) + " -> (" + red.name() + ", " + blue.name() + ")",
                    [&]() -> std::pair<bool, std::string> {
                        auto v = arrows(host, red, blue);
                        std::ostringstream d;
                        d << (v.arrows ? "arrows" : "refuted") << ", avoiders examined "
                          << v.avoiders_examined;
                        return {v.arrows, d.str()};
                    });
    }

    void check_exact(const std::string& id, const Pattern& red, const Pattern& blue, int budget,
                     long expect) {
        run_guarded(id, "size Ramsey (" + red.name() + ", " + blue.name() + ")",
                    [&]() -> std::pair<bool, std::string> {
                        RamseyReport r = size_ramsey(red, blue, budget, opts.threads);
                        std::ostringstream d;
                        d << "status " << r.status << ", expected " << expect;
                        if (r.value) d << ", got " << *r.value;
                        std::uint64_t examined = 0;
                        for (const auto& s : r.sweeps) examined += s.examined;
                        d << ", graphs examined " << examined;
                        bool pass = r.status == "exact" && r.value && *r.value == expect &&
                                    r.formula_consistent;
                        return {pass, d.str()};
                    });
    }

    void check_pack(int n, int m) {
        std::ostringstream id;
        id << "pack." << n << "P" << m;
        run_guarded(id.str(),
                    "every connected graph with " + std::to_string(n * m) +
                        " edges avoids (2K2, " + Pattern::path_pack(n, m).name() + ")",
                    [&]() -> std::pair<bool, std::string> {
                        auto rec = connected_pack_sweep(n, m, opts.threads);
                        std::ostringstream d;
                        d << "examined " << rec.examined << " connected graphs with " << rec.q
                          << " edges, all certificates valid";
                        return {rec.ok, d.str()};
                    });
    }

    void witness_checks() {
        for (int n = 1; n <= 3; ++n)
            check_witness("witness.p3.fan" + std::to_string(2 * n - 1),
                          build(FamilySpec::k1_plus_nc4(n)), Pattern::path(3),
                          Pattern::fan(2 * n - 1));
        for (int n = 1; n <= 2; ++n)
            check_witness("witness.p3.fan" + std::to_string(2 * n),
                          build(FamilySpec::k1_plus_nc4_p3(n)), Pattern::path(3),
                          Pattern::fan(2 * n));
        for (int n = 3; n <= 5; ++n)
            check_witness("witness.2k2.fan" + std::to_string(n), build(FamilySpec::h_graph(n)),
                          Pattern::matching(2), Pattern::fan(n));
        check_witness("witness.2k2.f2", build(FamilySpec::two_f2()), Pattern::matching(2),
                      Pattern::fan(2));
        for (auto [n, m] : {std::pair{1, 3}, {2, 3}, {2, 4}, {3, 3}}) {
            const std::string tag = std::to_string(n) + "P" + std::to_string(m);
            check_witness("witness.2k2.pack." + tag + ".cycle",
                          build(FamilySpec::cycle(n * m + 1)), Pattern::matching(2),
                          Pattern::path_pack(n, m));
            check_witness("witness.2k2.pack." + tag + ".paths",
                          build(FamilySpec::path_union(n + 1, m)), Pattern::matching(2),
                          Pattern::path_pack(n, m));
        }
    }

    void exact_checks() {
        check_exact("exact.p3.k3", Pattern::path(3), Pattern::clique(3), 8, 8);
        check_exact("exact.2k2.k3", Pattern::matching(2), Pattern::clique(3), 6, 6);
        check_exact("exact.2k2.p4", Pattern::matching(2), Pattern::path(4), 4, 5);
        check_exact("exact.2k2.2p3", Pattern::matching(2), Pattern::path_pack(2, 3), 6, 6);
        for (int n1 = 1; n1 <= 3; ++n1)
            for (int n2 = 1; n2 <= 3; ++n2)
                check_exact("exact.matching." + std::to_string(n1) + "." + std::to_string(n2),
                            Pattern::matching(n1), Pattern::matching(n2), n1 + n2 - 1,
                            n1 + n2 - 1);
        if (opts.full) {
            check_exact("exact.p3.f2", Pattern::path(3), Pattern::fan(2), 10, 10);
            // Budget 11 exhausts the lower bound; 2F2 closes the interval.
            check_exact("exact.2k2.f2", Pattern::matching(2), Pattern::fan(2), 11, 12);
        }
    }

    void period3_checks() {
        bool pass = true;
        std::ostringstream d;
        for (int l = 3; l <= 20 && pass; ++l) {
            for (bool cycle : {true, false}) {
                Graph g = cycle ? build(FamilySpec::cycle(l)) : build(FamilySpec::path(l + 1));
                EdgeColoring c = period3_coloring(g);
                Graph reds = g.subgraph_edges(c.red);
                Graph blues = g.subgraph_edges(c.blue);
                const bool red_matching = !contains(reds, Pattern::path(3)).has_value();
                const int nu = max_matching(blues).size;
                if (!red_matching || nu != (l + 2) / 3) {
                    pass = false;
                    d << (cycle ? "C" : "path of length ") << l << ": red matching "
                      << red_matching << ", blue matching number " << nu << " vs " << (l + 2) / 3;
                    break;
                }
            }
        }
        if (pass) d << "lengths 3..20, cycles and paths";
        add("period3.range", "period-3 coloring keeps blue matching number ceil(l/3)", pass,
            d.str());
    }

    void inequality_checks() {
        bool pass = true;
        std::ostringstream d;
        auto cycle_term = [](int c) { return eval_inequality1({c}, {}, 0, 0).first - 3; };
        auto path_term = [](int p) { return eval_inequality1({}, {p}, 0, 0).first - 3; };
        for (int c = 3; c <= 20 && pass; ++c) {
            const long t = cycle_term(c);
            const bool ok = c == 4 ? t == 0 : t <= -2;
            if (!ok) {
                pass = false;
                d << "cycle term c=" << c << " is " << t;
            }
        }
        for (int p = 2; p <= 20 && pass; ++p) {
            const long t = path_term(p);
            const bool ok = (p == 2 || p == 4) ? t == -1 : t <= -3;
            if (!ok) {
                pass = false;
                d << "path term p=" << p << " is " << t;
            }
        }
        if (pass) d << "all cycle/path terms in range for parameters <= 20";
        add("inequality.terms", "degree inequality term table", pass, d.str());
    }

    void enumeration_checks() {
        run_guarded("enumerate.counts", "isomorphism classes for q = 1, 2, 3",
                    [&]() -> std::pair<bool, std::string> {
                        const std::uint64_t expect[] = {1, 2, 5};
                        std::ostringstream d;
                        bool pass = true;
                        for (int q = 1; q <= 3; ++q) {
                            EnumerationTask task;
                            task.edge_count = q;
                            const auto got = count_with_edges(task);
                            d << (q > 1 ? ", " : "") << "q=" << q << ": " << got;
                            pass = pass && got == expect[q - 1];
                        }
                        return {pass, d.str()};
                    });
    }

    void stretch_checks() {
        run_guarded("stretch.p3.f3", "size Ramsey (P3, F3) = 16 via q = 15 exhaustion",
                    [&]() -> std::pair<bool, std::string> {
                        EnumerationTask base;
                        base.budget = 15;
                        // Any arrowing host contains F3 all-blue, so its
                        // maximum degree is at least 6.
                        base.min_max_degree = 6;
                        auto rec = verify_lower(Pattern::path(3), Pattern::fan(3), 15, base,
                                                opts.threads);
                        auto upper = arrows(build(FamilySpec::k1_plus_nc4(2)), Pattern::path(3),
                                            Pattern::fan(3));
                        std::ostringstream d;
                        d << "q=15 examined " << rec.examined << " graphs with max degree >= 6";
                        if (rec.refuted_g6) d << ", arrowing graph " << *rec.refuted_g6;
                        d << "; 16-edge witness " << (upper.arrows ? "arrows" : "fails");
                        return {rec.all_nonarrowing && upper.arrows, d.str()};
                    });
    }
};

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
    Suite suite{opts};
    suite.witness_checks();
    suite.exact_checks();
    for (auto [n, m] : {std::pair{1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 3}}) suite.check_pack(n, m);
    suite.period3_checks();
    suite.inequality_checks();
    suite.enumeration_checks();
    if (opts.stretch) suite.stretch_checks();
    return suite.results;
}

}  // namespace ramsey
