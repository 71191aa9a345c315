#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string_view>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "ramsey/bounds.hpp"
#include "ramsey/canonical.hpp"
#include "ramsey/family.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/report_json.hpp"
#include "ramsey/verify.hpp"

namespace {

using namespace ramsey;
using nlohmann::json;

constexpr int kOk = 0;        // verified / true
constexpr int kRefuted = 1;   // refuted / false, certificate emitted
constexpr int kUsage = 2;
constexpr int kBudget = 3;

/// Graph sources: family:<name>, g6:<string>, file:<path> (graph6 lines),
/// or "-" for graph6 lines on stdin.
std::vector<Graph> load_graphs(const std::string& src) {
    auto from_stream = [](std::istream& in) {
        std::vector<Graph> graphs;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            graphs.push_back(parse_graph6(line));
        }
        if (graphs.empty()) throw InvalidParameter("no graph6 lines in input");
        return graphs;
    };
    if (src == "-") return from_stream(std::cin);
    if (src.rfind("family:", 0) == 0) return {build(parse_family(src.substr(7)))};
    if (src.rfind("g6:", 0) == 0) return {parse_graph6(src.substr(3))};
    if (src.rfind("file:", 0) == 0) {
        std::ifstream in(src.substr(5));
        if (!in) throw InvalidParameter("cannot open " + src.substr(5));
        return from_stream(in);
    }
    throw InvalidParameter("graph source must be family:, g6:, file: or -");
}

/// Optional key = value config file for budgets ('#' starts a comment).
void apply_config(const std::string& path, int& budget_edges, int& generic_budget,
                  int& threads) {
    std::ifstream in(path);
    if (!in) throw InvalidParameter("cannot open config file " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream row(line);
        std::string key, eq;
        int value;
        if (!(row >> key)) continue;
        if (!(row >> eq >> value) || eq != "=")
            throw InvalidParameter("config lines must read key = value");
        if (key == "budget_edges") budget_edges = value;
        else if (key == "generic_budget") generic_budget = value;
        else if (key == "threads") threads = value;
        else throw InvalidParameter("unknown config key " + key);
    }
}

json read_json(const std::string& src) {
    if (src == "-") return json::parse(std::cin);
    std::ifstream in(src);
    if (!in) throw InvalidParameter("cannot open " + src);
    return json::parse(in);
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int default_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

int run(int argc, char** argv) {
    CLI::App app{"size Ramsey number verification engine"};
    app.require_subcommand(1);

    // family ------------------------------------------------------------
    auto* family_cmd = app.add_subcommand("family", "build a named graph family");
    std::string family_name;
    bool family_json = false;
    family_cmd->add_option("name", family_name, "family name, e.g. H3 or K1+2C4")->required();
    family_cmd->add_flag("--json", family_json);

    // arrow ---------------------------------------------------------------
    auto* arrow_cmd = app.add_subcommand("arrow", "decide G -> (red, blue)");
    std::string arrow_graph, arrow_red, arrow_blue, arrow_cert_out, arrow_config;
    int arrow_budget = 24;
    bool arrow_json = false;
    arrow_cmd->add_option("--graph", arrow_graph, "family:, g6:, file: or - for stdin")
        ->required();
    arrow_cmd->add_option("--red", arrow_red)->required();
    arrow_cmd->add_option("--blue", arrow_blue)->required();
    arrow_cmd->add_option("--budget", arrow_budget, "edge budget for generic avoiders");
    arrow_cmd->add_option("--certificates-out", arrow_cert_out, "append certificates here");
    arrow_cmd->add_option("--config", arrow_config, "key = value config file");
    arrow_cmd->add_flag("--json", arrow_json);

    // check-color -----------------------------------------------------------
    auto* check_cmd = app.add_subcommand("check-color", "validate a coloring certificate");
    std::string check_src = "-", check_red, check_blue;
    bool check_json = false;
    check_cmd->add_option("--cert", check_src, "certificate JSON file, or - for stdin");
    check_cmd->add_option("--red", check_red, "override the certificate's red pattern");
    check_cmd->add_option("--blue", check_blue, "override the certificate's blue pattern");
    check_cmd->add_flag("--json", check_json);

    // enumerate ---------------------------------------------------------
    auto* enum_cmd = app.add_subcommand("enumerate", "graphs by edge count, one per class");
    EnumerationTask task;
    bool enum_count = false, enum_json = false;
    enum_cmd->add_option("--edges", task.edge_count, "number of edges")->required();
    enum_cmd->add_flag("--connected", task.connected_only);
    enum_cmd->add_option("--min-max-degree", task.min_max_degree);
    enum_cmd->add_option("--max-vertices", task.max_vertices);
    enum_cmd->add_option("--budget", task.budget);
    enum_cmd->add_flag("--count", enum_count, "print only the class count");
    enum_cmd->add_flag("--json", enum_json);

    // ramsey ------------------------------------------------------------
    auto* ramsey_cmd = app.add_subcommand("ramsey", "compute a size Ramsey number");
    std::string ramsey_red, ramsey_blue, ramsey_config;
    int ramsey_budget = 11, ramsey_threads = default_threads();
    bool ramsey_json = false, ramsey_det = false;
    ramsey_cmd->add_option("--red", ramsey_red)->required();
    ramsey_cmd->add_option("--blue", ramsey_blue)->required();
    ramsey_cmd->add_option("--budget-edges", ramsey_budget);
    ramsey_cmd->add_option("--threads", ramsey_threads);
    ramsey_cmd->add_option("--config", ramsey_config, "key = value config file");
    ramsey_cmd->add_flag("--deterministic-order", ramsey_det,
                         "drop timings so reruns compare byte for byte");
    ramsey_cmd->add_flag("--json", ramsey_json);

    // verify-paper --------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify-paper", "run the verification suite");
    std::string verify_level = "quick";
    VerifyOptions vopts;
    vopts.threads = default_threads();
    bool verify_json = false;
    verify_cmd->add_option("--level", verify_level)
        ->check(CLI::IsMember({"quick", "full"}));
    verify_cmd->add_flag("--stretch", vopts.stretch, "include the hours-long q = 15 sweep");
    verify_cmd->add_option("--threads", vopts.threads);
    verify_cmd->add_flag("--json", verify_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    if (family_cmd->parsed()) {
        Graph g = build(parse_family(family_name));
        if (family_json) {
            emit({{"name", family_name},
                  {"graph6", write_graph6(g)},
                  {"order", g.order()},
                  {"size", g.size()},
                  {"canonical", canonical_form(g)}});
        } else {
            std::cout << write_graph6(g) << "\n";
        }
        return kOk;
    }

    if (arrow_cmd->parsed()) {
        int unused_threads = 1;
        if (!arrow_config.empty())
            apply_config(arrow_config, arrow_budget, arrow_budget, unused_threads);
        const Pattern red = parse_pattern(arrow_red);
        const Pattern blue = parse_pattern(arrow_blue);
        ArrowOptions opts;
        opts.generic_budget = arrow_budget;
        std::ofstream certs;
        if (!arrow_cert_out.empty()) {
            certs.open(arrow_cert_out, std::ios::app);
            if (!certs) throw InvalidParameter("cannot open " + arrow_cert_out);
        }
        bool all_arrow = true;
        for (const Graph& g : load_graphs(arrow_graph)) {
            ArrowVerdict v = arrows(g, red, blue, opts);
            all_arrow = all_arrow && v.arrows;
            if (arrow_json) {
                emit(verdict_json(v, g, red, blue));
            } else if (v.arrows) {
                std::cout << write_graph6(g) << " arrows (" << red.name() << ", " << blue.name()
                          << "); avoiders examined: " << v.avoiders_examined << "\n";
            } else {
                std::cout << write_graph6(g) << " does not arrow (" << red.name() << ", "
                          << blue.name() << ")\n";
                std::cout << coloring_json(*v.certificate, red.name(), blue.name()).dump(2)
                          << "\n";
            }
            if (certs.is_open() && v.certificate)
                certs << coloring_json(*v.certificate, red.name(), blue.name()).dump() << "\n";
        }
        return all_arrow ? kOk : kRefuted;
    }

    if (check_cmd->parsed()) {
        std::string red_name, blue_name;
        EdgeColoring coloring = coloring_from_json(read_json(check_src), &red_name, &blue_name);
        if (!check_red.empty()) red_name = check_red;
        if (!check_blue.empty()) blue_name = check_blue;
        const Pattern red = parse_pattern(red_name);
        const Pattern blue = parse_pattern(blue_name);
        const bool valid = check_coloring(coloring, red, blue);
        if (check_json) {
            emit({{"valid", valid},
                  {"red_pattern", red.name()},
                  {"blue_pattern", blue.name()}});
        } else {
            std::cout << (valid ? "certificate valid: no red " + red.name() + ", no blue " +
                                      blue.name()
                                : "certificate invalid: a color class contains its pattern")
                      << "\n";
        }
        return valid ? kOk : kRefuted;
    }

    if (enum_cmd->parsed()) {
        const auto graphs = graphs_with_edges(task);
        if (enum_json) {
            json list = json::array();
            for (const Graph& g : graphs) list.push_back(write_graph6(g));
            emit({{"edges", task.edge_count}, {"count", graphs.size()}, {"graphs", list}});
        } else if (enum_count) {
            std::cout << graphs.size() << "\n";
        } else {
            for (const Graph& g : graphs) std::cout << write_graph6(g) << "\n";
        }
        return kOk;
    }

    if (ramsey_cmd->parsed()) {
        int unused_generic = 24;
        if (!ramsey_config.empty())
            apply_config(ramsey_config, ramsey_budget, unused_generic, ramsey_threads);
        const Pattern red = parse_pattern(ramsey_red);
        const Pattern blue = parse_pattern(ramsey_blue);
        RamseyReport report = size_ramsey(red, blue, ramsey_budget, ramsey_threads);
        if (ramsey_json) {
            emit(report_json(report, !ramsey_det));
        } else if (report.status == "exact") {
            std::cout << "r(" << red.name() << ", " << blue.name() << ") = " << *report.value
                      << (report.witness_g6 ? " with witness " + *report.witness_g6 : "")
                      << "\n";
        } else {
            std::cout << "r(" << red.name() << ", " << blue.name() << ") in ["
                      << report.lower << ", "
                      << (report.upper ? std::to_string(*report.upper) : "?")
                      << "] (budget " << ramsey_budget << " edges exhausted)\n";
        }
        return report.status == "exact" ? kOk : kBudget;
    }

    // verify-paper
    vopts.full = verify_level == "full";
    const auto checks = run_verification(vopts);
    bool all_pass = true;
    for (const auto& c : checks) all_pass = all_pass && c.pass;
    if (verify_json) {
        json list = json::array();
        for (const auto& c : checks)
            list.push_back(
                {{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"details", c.details}});
        emit({{"schema_version", 1},
              {"level", verify_level},
              {"stretch", vopts.stretch},
              {"all_pass", all_pass},
              {"checks", list}});
    } else {
        for (const auto& c : checks)
            std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.id << ": " << c.details << "\n";
        std::cout << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return all_pass ? kOk : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
    const bool want_json = std::any_of(argv, argv + argc, [](const char* a) {
        return std::string_view(a) == "--json";
    });
    auto report_error = [&](const char* kind, const std::exception& e, int code) {
        if (want_json)
            emit({{"error", kind}, {"message", e.what()}, {"exit_code", code}});
        else
            std::cerr << kind << ": " << e.what() << "\n";
        return code;
    };
    try {
        return run(argc, argv);
    } catch (const BudgetExceeded& e) {
        return report_error("budget exceeded", e, kBudget);
    } catch (const std::exception& e) {
        return report_error("error", e, kUsage);
    }
}
