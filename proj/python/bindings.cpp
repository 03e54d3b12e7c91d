#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "degcut/connectivity.hpp"
#include "degcut/constructions.hpp"
#include "degcut/cut_search.hpp"
#include "degcut/degeneracy.hpp"
#include "degcut/discharging.hpp"
#include "degcut/enumerate.hpp"
#include "degcut/errors.hpp"
#include "degcut/graph6.hpp"
#include "degcut/verify.hpp"

namespace py = pybind11;
using namespace degcut;

namespace {

VertexSet to_set(const Graph& g, const std::vector<int>& members) {
    VertexSet s;
    for (int v : members) {
        if (v < 0 || v >= g.order())
            throw invalid_input("vertex " + std::to_string(v) + " out of range");
        s.insert(v);
    }
    return s;
}

py::dict certificate_dict(const CutCertificate& c) {
    py::list parts;
    for (const auto& p : c.components)
        parts.append(p.members());
    py::dict d;
    d["cut"] = c.cut.members();
    d["components"] = parts;
    d["cut_degeneracy"] = c.cut_degeneracy;
    d["independent"] = c.independent;
    d["forest"] = c.forest;
    d["bipartite"] = c.bipartite;
    return d;
}

py::dict search_dict(const CutSearchResult& r) {
    static const char* names[] = {"found", "none", "budget_exceeded"};
    py::dict d;
    d["outcome"] = names[static_cast<int>(r.outcome)];
    d["cut"] = r.certificate ? py::object(certificate_dict(*r.certificate)) : py::object(py::none());
    d["fast_path"] = r.fast_path;
    return d;
}

EnumerationSpec make_spec(int n, int min_edges, std::optional<int> max_edges, std::optional<int> min_degree,
                          bool connected, bool iso) {
    EnumerationSpec spec;
    spec.n = n;
    spec.min_edges = min_edges;
    spec.max_edges = max_edges;
    spec.min_degree = min_degree;
    spec.connected_only = connected;
    spec.iso_reject = iso;
    return spec;
}

Statement statement_or_throw(const std::string& id) {
    auto s = parse_statement(id);
    if (!s)
        throw invalid_input("unknown theorem " + id);
    return *s;
}

} // namespace

PYBIND11_MODULE(_degcut, m) {
    m.doc() = "Degenerate vertex cuts: cores, connectivity, cut search, constructions and verification";

    auto base = py::register_exception<error>(m, "Error", PyExc_ValueError);
    py::register_exception<parse_error>(m, "ParseError", base.ptr());
    py::register_exception<no_cuts_exist>(m, "NoCutsExist", base.ptr());

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n") = 0)
        .def_static(
            "from_edges",
            [](int n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }, py::arg("n"),
            py::arg("edges"))
        .def_static("from_graph6", [](const std::string& text) { return parse_graph6(text); })
        .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
        .def_property_readonly("n", &Graph::order)
        .def_property_readonly("m", &Graph::size)
        .def("edges", &Graph::edges)
        .def("degree", &Graph::degree)
        .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v).members(); })
        .def("adjacent", &Graph::adjacent)
        .def("min_degree", &Graph::min_degree)
        .def("max_degree", &Graph::max_degree)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
        });

    m.def("parse_graph6", [](const std::string& text) { return parse_graph6(text); });
    m.def("to_graph6", &to_graph6);
    m.def("induced_subgraph",
          [](const Graph& g, const std::vector<int>& s) { return induced_subgraph(g, to_set(g, s)); });
    m.def("remove_vertices",
          [](const Graph& g, const std::vector<int>& s) { return remove_vertices(g, to_set(g, s)); });
    m.def("join", &join);
    m.def("complete_graph", &complete_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("petersen_graph", &petersen_graph);
    m.def(
        "enumerate_labeled",
        [](int n, int min_edges, std::optional<int> max_edges, std::optional<int> min_degree, bool connected,
           bool iso) {
            std::vector<Graph> out;
            for_each_labeled(make_spec(n, min_edges, max_edges, min_degree, connected, iso),
                             [&](const Graph& g) { out.push_back(g); });
            return out;
        },
        py::arg("n"), py::arg("min_edges") = 0, py::arg("max_edges") = py::none(), py::arg("min_degree") = py::none(),
        py::arg("connected") = false, py::arg("iso_reject") = false);

    m.def("max_k_core", [](const Graph& g, int k) { return max_k_core(g, k).core.members(); });
    m.def("is_k_degenerate", &is_k_degenerate);
    m.def("degeneracy", &degeneracy);

    m.def("components", [](const Graph& g) {
        std::vector<std::vector<int>> out;
        for (const auto& c : components(g))
            out.push_back(c.members());
        return out;
    });
    m.def("is_cut", [](const Graph& g, const std::vector<int>& s) { return is_cut(g, to_set(g, s)); });
    m.def("vertex_connectivity", &vertex_connectivity);
    m.def("minimum_cuts", [](const Graph& g) {
        py::list out;
        for (const auto& c : minimum_cuts(g))
            out.append(certificate_dict(c));
        return out;
    });

    m.def(
        "find_degenerate_cut",
        [](const Graph& g, int k, std::uint64_t budget) { return search_dict(find_degenerate_cut(g, k, budget)); },
        py::arg("g"), py::arg("k"), py::arg("budget") = default_subset_budget);
    m.def("find_min_degenerate_cut", [](const Graph& g, int k) { return search_dict(find_min_degenerate_cut(g, k)); });
    m.def("classify_cut",
          [](const Graph& g, const std::vector<int>& s) { return certificate_dict(classify_cut(g, to_set(g, s))); });

    m.def(
        "ring_of_cliques",
        [](int k, int s, std::vector<std::vector<int>> matchings) {
            return ring_of_cliques(RingSpec{k, s, std::move(matchings)});
        },
        py::arg("k"), py::arg("s"), py::arg("matchings") = std::vector<std::vector<int>>{});
    m.def("join_extremal", &join_extremal);

    m.def("meets_sqrt_size_bound", &meets_sqrt_size_bound);
    m.def("meets_two_degenerate_size_bound", &meets_two_degenerate_size_bound);
    m.def("within_min_cut_edge_budget", &within_min_cut_edge_budget);
    m.def("check_min_degree", &check_min_degree);

    m.def(
        "run_discharging",
        [](const Graph& g, const std::string& scheme, int k) {
            if (scheme != "large_to_small" && scheme != "degree_excess")
                throw invalid_input("unknown scheme " + scheme);
            auto s = scheme == "large_to_small" ? large_to_small_scheme(k) : degree_excess_scheme();
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto& c : run_discharging(g, s))
                out.emplace_back(c.a().to_string(), c.b().to_string());
            return out;
        },
        py::arg("g"), py::arg("scheme"), py::arg("k") = 2);

    m.def(
        "verify_enumeration_json",
        [](const std::string& theorem, int k, int n, std::optional<int> min_degree, std::optional<int> max_edges,
           bool connected, int jobs) {
            auto spec = make_spec(n, 0, max_edges, min_degree, connected, false);
            py::gil_scoped_release release;
            return verify_enumeration(statement_or_throw(theorem), k, spec, jobs).to_json().dump();
        },
        py::arg("theorem"), py::arg("k"), py::arg("n"), py::arg("min_degree") = py::none(),
        py::arg("max_edges") = py::none(), py::arg("connected") = false, py::arg("jobs") = 1);
    m.def("verify_graphs_json", [](const std::string& theorem, int k, const std::vector<Graph>& graphs) {
        std::size_t i = 0;
        auto report = verify_stream(statement_or_throw(theorem), k, [&]() -> std::optional<Graph> {
            if (i == graphs.size())
                return std::nullopt;
            return graphs[i++];
        });
        return report.to_json().dump();
    });
}
