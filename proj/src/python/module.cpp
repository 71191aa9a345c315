#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"
#include "ramsey/bounds.hpp"
#include "ramsey/canonical.hpp"
#include "ramsey/family.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/matching.hpp"
#include "ramsey/report_json.hpp"
#include "ramsey/verify.hpp"

namespace py = pybind11;
using namespace ramsey;

namespace {

py::object to_py(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null: return py::none();
        case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer: return py::int_(j.get<long long>());
        case nlohmann::json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
        case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(to_py(item));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

EdgeColoring make_coloring(const Graph& host, const std::vector<Edge>& red,
                           const std::vector<Edge>& blue) {
    return {host, red, blue};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "size Ramsey number verification engine";

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded");
    py::register_exception<PartitionMismatch>(m, "PartitionMismatch");

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n") = 0)
        .def_static("from_edges", &Graph::from_edges, py::arg("n"), py::arg("edges"))
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def("add_edge", &Graph::add_edge)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("max_degree", &Graph::max_degree)
        .def("degree_sequence", &Graph::degree_sequence)
        .def("edges", &Graph::edge_list)
        .def("connected", &Graph::connected)
        .def("graph6", [](const Graph& g) { return write_graph6(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) { return "Graph(g6='" + write_graph6(g) + "')"; });

    m.def("parse_graph6", &parse_graph6);
    m.def("write_graph6", &write_graph6);
    m.def("canonical_form", &canonical_form);
    m.def("is_isomorphic", &is_isomorphic);

    m.def("family", [](const std::string& name) { return build(parse_family(name)); },
          "Build a named graph family (H3, F2, K1+2C4, 2F2, ...)");

    m.def("pattern_graph",
          [](const std::string& name) { return parse_pattern(name).to_graph(); });

    m.def(
        "contains",
        [](const Graph& g, const std::string& pattern) -> py::object {
            auto w = contains(g, parse_pattern(pattern));
            if (!w) return py::none();
            py::dict out;
            out["vertices"] = w->vertices;
            out["edges"] = w->edges;
            return out;
        },
        py::arg("graph"), py::arg("pattern"),
        "Witness dict when the pattern occurs as a subgraph, else None");

    m.def(
        "arrows",
        [](const Graph& g, const std::string& red, const std::string& blue, int budget) {
            const Pattern r = parse_pattern(red), b = parse_pattern(blue);
            ArrowOptions opts;
            opts.generic_budget = budget;
            return to_py(verdict_json(arrows(g, r, b, opts), g, r, b));
        },
        py::arg("graph"), py::arg("red"), py::arg("blue"), py::arg("budget") = 24);

    m.def(
        "check_coloring",
        [](const Graph& host, const std::vector<Edge>& red_edges,
           const std::vector<Edge>& blue_edges, const std::string& red,
           const std::string& blue) {
            return check_coloring(make_coloring(host, red_edges, blue_edges),
                                  parse_pattern(red), parse_pattern(blue));
        },
        py::arg("host"), py::arg("red_edges"), py::arg("blue_edges"), py::arg("red"),
        py::arg("blue"));

    m.def(
        "enumerate_graphs",
        [](int edges, bool connected, int min_max_degree, int max_vertices, int budget) {
            EnumerationTask task{edges, min_max_degree, connected, max_vertices, budget};
            std::vector<std::string> out;
            for (const Graph& g : graphs_with_edges(task)) out.push_back(write_graph6(g));
            return out;
        },
        py::arg("edges"), py::arg("connected") = false, py::arg("min_max_degree") = 0,
        py::arg("max_vertices") = 0, py::arg("budget") = 15,
        "Canonical graph6 strings, one per isomorphism class");

    m.def(
        "size_ramsey",
        [](const std::string& red, const std::string& blue, int budget, int threads) {
            return to_py(report_json(
                size_ramsey(parse_pattern(red), parse_pattern(blue), budget, threads)));
        },
        py::arg("red"), py::arg("blue"), py::arg("budget_edges") = 11, py::arg("threads") = 1);

    m.def(
        "predicted",
        [](const std::string& red, const std::string& blue) -> py::object {
            auto v = predicted(parse_pattern(red), parse_pattern(blue));
            if (!v) return py::none();
            return py::int_(*v);
        },
        py::arg("red"), py::arg("blue"), "Registry value, or None outside validity domains");

    m.def(
        "witness",
        [](const std::string& red, const std::string& blue) -> py::object {
            auto w = witness_for(parse_pattern(red), parse_pattern(blue));
            if (!w) return py::none();
            return py::cast(*w);
        },
        py::arg("red"), py::arg("blue"));

    m.def("max_matching", [](const Graph& g) {
        auto r = max_matching(g);
        py::dict out;
        out["size"] = r.size;
        out["edges"] = r.edges;
        return out;
    });

    m.def("period3_coloring", [](const Graph& g) {
        auto c = period3_coloring(g);
        py::dict out;
        out["red"] = c.red;
        out["blue"] = c.blue;
        return out;
    });

    m.def("eval_inequality1", &eval_inequality1, py::arg("cycle_lengths"),
          py::arg("path_lengths"), py::arg("du"), py::arg("eps"));

    m.def(
        "verify",
        [](const std::string& level, bool stretch, int threads) {
            VerifyOptions opts;
            opts.full = level == "full";
            opts.stretch = stretch;
            opts.threads = threads;
            py::list out;
            for (const auto& c : run_verification(opts)) {
                py::dict row;
                row["id"] = c.id;
                row["name"] = c.name;
                row["pass"] = c.pass;
                row["details"] = c.details;
                out.append(row);
            }
            return out;
        },
        py::arg("level") = "quick", py::arg("stretch") = false, py::arg("threads") = 1);
}
