#include "ramsey/report_json.hpp"

#include "ramsey/graph6.hpp"

namespace ramsey {

namespace {

nlohmann::json edge_array(const std::vector<Edge>& edges) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto [u, v] : edges) arr.push_back({u, v});
    return arr;
}

std::vector<Edge> edges_from(const nlohmann::json& arr) {
    std::vector<Edge> edges;
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 2)
            throw InvalidParameter("edge entries must be [u, v] pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return edges;
}

}  // namespace

nlohmann::json coloring_json(const EdgeColoring& c, const std::string& red_pattern,
                             const std::string& blue_pattern) {
    return {
        {"schema_version", 1},
        {"host", write_graph6(c.host)},
        {"red", edge_array(c.red)},
        {"blue", edge_array(c.blue)},
        {"red_pattern", red_pattern},
        {"blue_pattern", blue_pattern},
    };
}

EdgeColoring coloring_from_json(const nlohmann::json& doc, std::string* red_pattern,
                                std::string* blue_pattern) {
    for (const char* key : {"host", "red", "blue", "red_pattern", "blue_pattern"})
        if (!doc.contains(key))
            throw InvalidParameter(std::string("certificate is missing \"") + key + "\"");
    if (red_pattern) *red_pattern = doc["red_pattern"].get<std::string>();
    if (blue_pattern) *blue_pattern = doc["blue_pattern"].get<std::string>();
    return {parse_graph6(doc["host"].get<std::string>()), edges_from(doc["red"]),
            edges_from(doc["blue"])};
}

nlohmann::json verdict_json(const ArrowVerdict& v, const Graph& host, const Pattern& red,
                            const Pattern& blue, bool include_timing) {
    nlohmann::json doc{
        {"host", write_graph6(host)},
        {"red_pattern", red.name()},
        {"blue_pattern", blue.name()},
        {"arrows", v.arrows},
        {"avoiders_examined", v.avoiders_examined},
    };
    if (v.certificate)
        doc["certificate"] = coloring_json(*v.certificate, red.name(), blue.name());
    if (include_timing) doc["elapsed_s"] = v.elapsed_s;
    return doc;
}

nlohmann::json report_json(const RamseyReport& r, bool include_timing) {
    nlohmann::json doc{
        {"schema_version", 1},
        {"red_pattern", r.red},
        {"blue_pattern", r.blue},
        {"status", r.status},
        {"lower", r.lower},
        {"formula_consistent", r.formula_consistent},
    };
    doc["value"] = r.value ? nlohmann::json(*r.value) : nlohmann::json();
    doc["upper"] = r.upper ? nlohmann::json(*r.upper) : nlohmann::json();
    doc["predicted"] = r.predicted ? nlohmann::json(*r.predicted) : nlohmann::json();
    if (r.witness_g6) {
        doc["witness"] = *r.witness_g6;
        doc["witness_avoiders"] = r.witness_avoiders;
    }
    nlohmann::json sweeps = nlohmann::json::array();
    for (const auto& s : r.sweeps) {
        nlohmann::json rec{
            {"q", s.q}, {"examined", s.examined}, {"all_nonarrowing", s.all_nonarrowing}};
        if (s.refuted_g6) rec["refuted"] = *s.refuted_g6;
        sweeps.push_back(std::move(rec));
    }
    doc["sweeps"] = std::move(sweeps);
    if (include_timing) doc["elapsed_s"] = r.elapsed_s;
    return doc;
}

}  // namespace ramsey
