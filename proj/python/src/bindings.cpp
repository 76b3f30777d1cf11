#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dcdkit/dcd.hpp"
#include "dcdkit/error.hpp"
#include "dcdkit/euclid.hpp"
#include "dcdkit/io.hpp"
#include "dcdkit/projgeom.hpp"
#include "dcdkit/rot_search.hpp"
#include "dcdkit/voltage.hpp"

namespace py = pybind11;
using namespace dcdkit;

namespace {

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

nlohmann::json from_python(const py::object& o) {
    return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

py::dict signature_dict(const ConfigSignature& s) {
    py::dict d;
    d["p"] = s.p;
    d["q"] = s.q;
    d["n"] = s.n;
    d["k"] = s.k;
    d["balanced"] = s.balanced;
    d["text"] = s.to_string();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Configurations, graph symmetry, exact realizations and rotational searches";

    py::register_exception<Error>(m, "DcdkitError");

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<Edge>& edges, const std::vector<int>& colors) { return Graph(n, edges, colors); }),
             py::arg("n"), py::arg("edges"), py::arg("colors") = std::vector<int>{})
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("edges", &Graph::edges)
        .def("neighbors", &Graph::neighbors)
        .def("adjacent", &Graph::adjacent)
        .def("is_bipartite", &Graph::is_bipartite)
        .def("is_connected", &Graph::is_connected)
        .def("without_colors", &Graph::without_colors)
        .def("to_edgelist", [](const Graph& g) { return to_edgelist(g); })
        .def("to_json", [](const Graph& g) { return to_python(to_json(g)); })
        .def_static("from_edgelist", &graph_from_edgelist)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph " + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) + " edges>";
        });

    py::class_<IncidenceStructure>(m, "IncidenceStructure")
        .def(py::init<std::vector<std::string>, std::vector<std::string>, std::vector<Flag>>(), py::arg("points"),
             py::arg("blocks"), py::arg("incidences"))
        .def_property_readonly("points", &IncidenceStructure::point_labels)
        .def_property_readonly("blocks", &IncidenceStructure::block_labels)
        .def_property_readonly("incidences", &IncidenceStructure::incidences)
        .def("signature", [](const IncidenceStructure& s) { return signature_dict(validate_configuration(s)); })
        .def("levi_graph", [](const IncidenceStructure& s) { return levi_graph(s).graph; })
        .def("dual", &dual)
        .def("is_self_polar", [](const IncidenceStructure& s) { return is_self_polar(s).has_value(); })
        .def("isomorphic", &isomorphic_structures)
        .def("to_json", [](const IncidenceStructure& s) { return to_python(to_json(s)); });

    m.def("dcd_build", [](int n) { return dcd_build(n).structure; }, py::arg("n"));
    m.def(
        "decompose",
        [](int n, int h) {
            const auto d = dcd_build(n);
            const auto dec = decompose(d, h);
            py::dict out;
            out["c1"] = dec.c1;
            out["c2"] = dec.c2;
            out["cross"] = dec.cross.size();
            out["duality"] = delta_is_duality(dec);
            out["round_trip"] = same_labelled_structure(reassemble(dec), d.structure);
            return out;
        },
        py::arg("n"), py::arg("h") = 0);
    m.def(
        "dcd_polarity",
        [](int n) {
            const auto d = dcd_build(n);
            const auto pol = polarity(d);
            return is_polarity(d.structure, pol.levi_map) && permutation_order(pol.levi_map) == 2;
        },
        py::arg("n"));
    m.def("cyclic_configuration", &cyclic_configuration, py::arg("symbol"), py::arg("m"));
    m.def("v_construction", [](const Graph& g) { return v_construction(g); });

    m.def("odd_graph", &odd_graph, py::arg("n"));
    m.def("kneser_graph", &kneser_graph, py::arg("m"), py::arg("k"));
    m.def("coxeter_graph", &coxeter_graph);
    m.def("danzer_graph", [] { return levi_graph(dcd_build(4).structure).graph.without_colors(); });
    m.def("kronecker_cover", [](const Graph& g) { return kronecker_cover(g).graph; });
    m.def("automorphism_order", [](const Graph& g) { return automorphism_group(g).order().get_str(); });
    m.def("edge_transitive", [](const Graph& g) { return edge_transitive(g); });
    m.def("girth", [](const Graph& g) { return girth(g); });
    m.def("canonical_form", [](const Graph& g) { return canonical_form_hex(g); });
    m.def("isomorphic", [](const Graph& a, const Graph& b) { return isomorphic(a, b); });
    m.def(
        "hamilton_cycle",
        [](const Graph& g, double budget) {
            HamiltonOptions opt;
            opt.node_budget = static_cast<std::uint64_t>(budget);
            return hamilton_cycle(g, opt);
        },
        py::arg("graph"), py::arg("node_budget") = 1e8);

    m.def(
        "realize_project",
        [](int n, std::uint64_t seed) {
            const auto r = realize_dcd(n, random_arrangement(n, 2 * n - 1, seed));
            const auto proj = find_projection(r, seed);
            py::dict out;
            out["spatial_incidences"] = r.verified_incidences;
            out["planar_incidences"] = verify_planar_incidences(proj.planar);
            out["clean"] = proj.scan.clean();
            out["configuration"] = to_python(to_json(proj.planar));
            out["svg"] = to_svg(proj.planar);
            return out;
        },
        py::arg("n") = 4, py::arg("seed") = 1);
    m.def(
        "steiner_quadrilateral",
        [](std::uint64_t seed) {
            const auto ls = random_certified_lines(4, seed);
            const auto r = steiner_quadrilateral<Rat>({ls[0], ls[1], ls[2], ls[3]});
            py::dict out;
            out["circles_concurrent"] = r.circles_concurrent;
            out["centers_concyclic"] = r.centers_concyclic;
            out["orthocenters_collinear"] = r.orthocenters_collinear;
            out["wallace_point"] = py::make_tuple(r.wallace_point.x.get_str(), r.wallace_point.y.get_str());
            return out;
        },
        py::arg("seed") = 1);
    m.def(
        "construction2",
        [](std::uint64_t seed) {
            const auto r = construction2_report<Rat>(random_certified_lines(7, seed));
            py::dict out;
            out["structure"] = r.configuration.structure;
            out["clean"] = r.report.clean();
            out["json"] = to_python(to_json(r.configuration));
            return out;
        },
        py::arg("seed") = 1);
    m.def(
        "point_circles",
        [](std::uint64_t seed, bool centers) {
            const auto ls = random_certified_lines(7, seed);
            const auto r = centers ? point_circle_centers_report<Rat>(ls) : point_circle_wallace_report<Rat>(ls);
            py::dict out;
            out["structure"] = r.configuration.structure;
            out["clean"] = r.report.clean();
            out["svg"] = to_svg(r.configuration);
            return out;
        },
        py::arg("seed") = 1, py::arg("centers") = false);

    m.def(
        "voltage_quotient",
        [](const Graph& g, int k) {
            const auto found = semiregular_cyclic(g, k, {1000000, 1});
            if (found.empty()) throw Error(ErrorKind::NotSemiregular, "no semiregular automorphism of that order found");
            return to_python(to_json(quotient(g, found.front())));
        },
        py::arg("graph"), py::arg("k"));
    m.def("voltage_cover", [](const py::object& vg) { return cover(voltage_from_json(from_python(vg))).graph; });

    m.def(
        "rotsearch",
        [](int k, int seeds, std::uint64_t seed, bool coxeter, int threads) {
            const RotationalSystem sys(coxeter ? coxeter_rotational_quotient() : danzer_rotational_quotient(k));
            SearchOptions opt;
            opt.seeds = seeds;
            opt.base_seed = seed;
            opt.threads = threads;
            SearchReport report;
            {
                py::gil_scoped_release release;
                report = search(sys, opt);
            }
            return to_python(report.to_json());
        },
        py::arg("k") = 7, py::arg("seeds") = 200, py::arg("seed") = 1, py::arg("coxeter") = false, py::arg("threads") = 0);
}
