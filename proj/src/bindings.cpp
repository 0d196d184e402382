#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hadwiger/coloring.hpp"
#include "hadwiger/construction.hpp"
#include "hadwiger/json_io.hpp"
#include "hadwiger/minor.hpp"
#include "hadwiger/product.hpp"

namespace py = pybind11;
using namespace hadwiger;

namespace {

std::vector<std::vector<int>> branch_sets_as_lists(const MinorModel& m) {
    std::vector<std::vector<int>> out;
    for (const auto& s : m.branch_sets) out.push_back(s.to_vector());
    return out;
}

MinorModel model_from_lists(const Graph& host, const Graph& pattern,
                            const std::vector<std::vector<int>>& sets) {
    MinorModel m;
    m.host = host;
    m.pattern = pattern;
    for (const auto& s : sets) m.branch_sets.push_back(Bitset::of(host.vertex_count(), s));
    return m;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Certified clique-minor constructions and exact desk-scale oracles "
              "for Cartesian products of graphs";

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n") = 0)
        .def_static("from_edges", &Graph::from_edges, py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("add_edge", &Graph::add_edge)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v); })
        .def("edges", &Graph::edges)
        .def("graph6", [](const Graph& g) { return write_graph6(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<MinorModel>(m, "MinorModel")
        .def(py::init(&model_from_lists), py::arg("host"), py::arg("pattern"),
             py::arg("branch_sets"))
        .def_property_readonly("host", [](const MinorModel& mm) { return mm.host; })
        .def_property_readonly("pattern", [](const MinorModel& mm) { return mm.pattern; })
        .def_property_readonly("branch_sets", &branch_sets_as_lists)
        .def("to_json", [](const MinorModel& mm) { return model_to_json(mm).dump(); })
        .def("__repr__", [](const MinorModel& mm) {
            return "MinorModel(pattern_n=" + std::to_string(mm.pattern.vertex_count()) +
                   ", host_n=" + std::to_string(mm.host.vertex_count()) + ")";
        });

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("ok", &VerificationReport::ok)
        .def_property_readonly("violations", [](const VerificationReport& r) {
            std::vector<std::pair<std::string, std::vector<int>>> out;
            for (const auto& v : r.violations)
                out.emplace_back(violation_kind_name(v.kind), v.pattern_vertices);
            return out;
        });

    py::class_<Coloring>(m, "Coloring")
        .def_readonly("k", &Coloring::k)
        .def_readonly("colors", &Coloring::colors);

    py::class_<FactorizationResult>(m, "FactorizationResult")
        .def_readonly("factors", &FactorizationResult::factors)
        .def_readonly("coordinates", &FactorizationResult::coordinates);

    py::class_<HadwigerResult>(m, "HadwigerResult")
        .def_readonly("value", &HadwigerResult::value)
        .def_readonly("exact", &HadwigerResult::exact)
        .def_readonly("nodes", &HadwigerResult::nodes)
        .def_property_readonly("witness", [](const HadwigerResult& r) { return *r.witness; });

    py::class_<AffinePlane>(m, "AffinePlane")
        .def_readonly("order", &AffinePlane::order)
        .def_readonly("classes", &AffinePlane::classes);

    // graph-core
    m.def("generate", &generate, py::arg("kind"), py::arg("params"));
    m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); });
    m.def("write_graph6", &write_graph6);
    m.def("export_dot", py::overload_cast<const Graph&>(&export_dot));
    m.def("export_dot_model", py::overload_cast<const MinorModel&>(&export_dot));
    m.def("is_connected", &is_connected);
    m.def("contract_edge", &contract_edge);
    m.def("delete_vertex", &delete_vertex);

    // product
    m.def("cartesian_product",
          [](const Graph& g, const Graph& h) { return cartesian_product(g, h).first; });
    m.def("cartesian_power", [](const Graph& g, int d) { return cartesian_power(g, d).first; });
    m.def("prime_factorize", &prime_factorize);
    m.def("is_prime_graph", &is_prime_graph);

    // coloring
    m.def("is_k_colorable", &is_k_colorable);
    m.def("chromatic_number", &chromatic_number);
    m.def("critical_subgraph", &critical_subgraph);
    m.def("extract_w_minor", &extract_w_minor);

    // minor
    m.def("verify_model", &verify_model);
    m.def("product_of_models", &product_of_models);
    m.def("compose_models", &compose_models);
    m.def(
        "has_minor",
        [](const Graph& host, const Graph& pattern, std::uint64_t budget) {
            auto res = has_minor(host, pattern, budget);
            std::string status = res.status == SearchStatus::Found          ? "found"
                                 : res.status == SearchStatus::NotFound     ? "not-found"
                                                                            : "indeterminate";
            return py::make_tuple(status, res.model ? py::cast(*res.model) : py::none());
        },
        py::arg("host"), py::arg("pattern"), py::arg("budget") = 0);
    m.def("hadwiger_exact", &hadwiger_exact, py::arg("g"), py::arg("budget") = 0);

    // affine
    m.def("affine_plane", &affine_plane);
    m.def("verify_plane", [](const AffinePlane& p) {
        auto check = verify_plane(p);
        return py::make_tuple(check.ok, check.violation);
    });

    // constructions
    m.def("max_construction_prime", &max_construction_prime);
    m.def("product_clique_model", &product_clique_model, py::arg("h"), py::arg("l"),
          py::arg("verify") = true);
    m.def("wn_square_clique_model", &wn_square_clique_model, py::arg("n"),
          py::arg("verify") = true);
    m.def("double_grid_clique_model", &double_grid_clique_model, py::arg("n"),
          py::arg("verify") = true);
    m.def("upper_bound_kn_km", &upper_bound_kn_km);
    m.def("hypercube_lower_bound", &hypercube_lower_bound);
    m.def("equal_chi_clique_model", &equal_chi_clique_model);
    m.def("power_clique_model", &power_clique_model);
    m.def("product_bound_report", [](const Graph& g1, const Graph& g2, std::uint64_t budget) {
        return bound_report_to_json(product_bound_report(g1, g2, budget)).dump();
    }, py::arg("g1"), py::arg("g2"), py::arg("budget") = 0);

#ifdef HADWIGER_VERSION
    m.attr("__version__") = HADWIGER_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
