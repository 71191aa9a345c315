// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any fail. Pass --cli <path> to enable the CLI determinism
// check and --stretch to run the optional q = 15 sweep.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "ramsey/bounds.hpp"
#include "ramsey/family.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/matching.hpp"
#include "ramsey/verify.hpp"

using namespace ramsey;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool pass, const std::string& details) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << " (" << what
              << "): " << details << "\n";
    if (!pass) ++failures;
}

bool ids_pass(const std::vector<CheckResult>& checks, const std::string& prefix,
              std::string& details) {
    int total = 0, passed = 0;
    std::string first_fail;
    for (const auto& c : checks) {
        if (c.id.rfind(prefix, 0) != 0) continue;
        ++total;
        if (c.pass) ++passed;
        else if (first_fail.empty()) first_fail = c.id + ": " + c.details;
    }
    std::ostringstream d;
    d << passed << "/" << total << " checks";
    if (!first_fail.empty()) d << "; first failure " << first_fail;
    details = d.str();
    return total > 0 && passed == total;
}

void oracle_equivalence() {
    const std::vector<Pattern> reds = {Pattern::path(3), Pattern::matching(2)};
    const std::vector<Pattern> blues = {Pattern::fan(1),  Pattern::fan(2),
                                        Pattern::clique(3), Pattern::path(4),
                                        Pattern::path_pack(2, 3), Pattern::matching(3)};
    Enumerator e(8);
    std::uint64_t compared = 0, disagreements = 0;
    std::string example;
    for (int q = 1; q <= 8; ++q)
        for (const std::string& s : e.level(q)) {
            Graph g = parse_graph6(s);
            for (const Pattern& red : reds)
                for (const Pattern& blue : blues) {
                    ++compared;
                    const bool fast = arrows(g, red, blue).arrows;
                    const bool slow = oracles::arrows_bruteforce(g, red, blue);
                    if (fast != slow && ++disagreements == 1)
                        example = s + " (" + red.name() + ", " + blue.name() + ")";
                }
        }
    std::ostringstream d;
    d << compared << " decisions on all graphs with <= 8 edges, " << disagreements
      << " disagreements";
    if (disagreements) d << ", e.g. " << example;
    report(5, "avoider oracle equivalence", disagreements == 0, d.str());
}

void matching_exactness() {
    std::mt19937 rng(20240815);
    int checked = 0, wrong = 0;
    for (int trial = 0; trial < 500; ++trial) {
        Graph g(0);
        if (trial % 5 == 4) {
            // Odd-cycle-rich: C5 + C7 with random chords.
            g = Graph(12);
            for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
            for (int i = 0; i < 7; ++i) g.add_edge(5 + i, 5 + (i + 1) % 7);
            std::uniform_int_distribution<int> pick(0, 11);
            for (int k = 0; k < 3; ++k) {
                int u = pick(rng), v = pick(rng);
                if (u != v && !g.adjacent(u, v)) g.add_edge(u, v);
            }
        } else {
            const int n = 4 + static_cast<int>(rng() % 9);  // up to 12 vertices
            g = Graph(n);
            std::bernoulli_distribution coin(0.15 + 0.07 * (rng() % 8));
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (coin(rng)) g.add_edge(u, v);
        }
        ++checked;
        if (max_matching(g).size != oracles::matching_bruteforce(g)) ++wrong;
    }
    std::ostringstream d;
    d << checked << " random graphs, " << wrong << " disagreements with the subset oracle";
    report(6, "matching exactness", wrong == 0, d.str());
}

void enumeration_counts(const std::vector<CheckResult>& checks) {
    std::string small_details;
    bool pass = ids_pass(checks, "enumerate.counts", small_details);
    std::ostringstream d;
    d << small_details;
    for (int q = 4; q <= 5; ++q) {
        EnumerationTask task;
        task.edge_count = q;
        const auto engine = count_with_edges(task);
        const auto oracle = oracles::count_classes_bruteforce(q);
        d << "; q=" << q << ": " << engine << " vs oracle " << oracle;
        pass = pass && engine == oracle;
    }
    report(9, "enumeration counts", pass, d.str());
}

void cli_determinism(const std::string& cli) {
    if (cli.empty()) {
        report(10, "CLI determinism", false, "no --cli path given");
        return;
    }
    auto capture = [&](int threads, const std::string& out) {
        std::ostringstream cmd;
        cmd << cli << " verify-paper --level quick --threads " << threads << " --json > " << out
            << " 2>/dev/null";
        return std::system(cmd.str().c_str()) == 0;
    };
    const std::string f1 = "acceptance_run1.json", f2 = "acceptance_run2.json";
    const bool ran = capture(1, f1) && capture(4, f2);
    std::string a, b;
    if (ran) {
        std::ostringstream s1, s2;
        s1 << std::ifstream(f1).rdbuf();
        s2 << std::ifstream(f2).rdbuf();
        a = s1.str();
        b = s2.str();
    }
    std::remove(f1.c_str());
    std::remove(f2.c_str());
    std::ostringstream d;
    d << "threads 1 vs 4, " << a.size() << " bytes each, "
      << (ran && !a.empty() && a == b ? "byte-identical" : "MISMATCH or run failure");
    report(10, "CLI determinism", ran && !a.empty() && a == b, d.str());
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    bool stretch = false;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--cli" && i + 1 < argc) cli = argv[++i];
        else if (arg == "--stretch") stretch = true;
    }

    VerifyOptions opts;
    opts.full = true;
    opts.stretch = stretch;
    opts.threads = 2;
    const auto checks = run_verification(opts);

    std::string details;
    report(1, "upper-bound witnesses", ids_pass(checks, "witness.", details), details);
    report(2, "exact values by full search", ids_pass(checks, "exact.", details), details);
    if (stretch)
        report(3, "stretch q=15 sweep", ids_pass(checks, "stretch.", details), details);
    else
        std::cout << "SKIP criterion 3 (stretch q=15 sweep): optional, pass --stretch to run\n";
    report(4, "pack sweeps with certificate revalidation", ids_pass(checks, "pack.", details),
           details);
    oracle_equivalence();
    matching_exactness();
    report(7, "period-3 coloring property", ids_pass(checks, "period3.", details), details);
    report(8, "inequality term table", ids_pass(checks, "inequality.", details), details);
    enumeration_counts(checks);
    cli_determinism(cli);

    std::cout << (failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(failures) + " criteria FAILED")
              << "\n";
    return failures == 0 ? 0 : 1;
}
