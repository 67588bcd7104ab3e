#include "polyspan/io.hpp"
#include "polyspan/spanners.hpp"
#include "polyspan/suite.hpp"
#include "polyspan/verifier.hpp"
#include "polyspan/visibility.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <map>
#include <sstream>

namespace py = pybind11;
using namespace polyspan;

namespace {

GraphKind kind_of(const std::string& name) {
    if (auto k = parse_graph_kind(name)) return *k;
    throw py::value_error("unknown graph \"" + name + "\" (expected vis, ginf, g15, g10 or g7)");
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw py::value_error("cannot read " + path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

Graph graph_from_edges(std::size_t n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

}  // namespace

PYBIND11_MODULE(_polyspan, m) {
    m.doc() = "Plane bounded-degree spanners among polygonal obstacles";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<SceneError>(m, "SceneError", PyExc_ValueError);
    py::register_exception<GeneralPositionError>(m, "GeneralPositionError", PyExc_ValueError);

    py::class_<Scene>(m, "Scene")
        .def_static("from_json", [](const std::string& text) { return parse_instance(text); }, py::arg("text"))
        .def_static("load", [](const std::string& path) { return parse_instance(read_file(path)); }, py::arg("path"))
        .def("to_json", [](const Scene& s) { return write_instance(s); })
        .def("__len__", &Scene::size)
        .def_property_readonly("vertices", [](const Scene& s) {
            std::vector<std::pair<double, double>> out;
            for (const auto& p : s.vertices) out.emplace_back(p.x.get_d(), p.y.get_d());
            return out;
        })
        .def_property_readonly("exact_vertices", [](const Scene& s) {
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto& p : s.vertices) out.emplace_back(format_rational(p.x), format_rational(p.y));
            return out;
        })
        .def_readonly("obstacles", &Scene::obstacles)
        .def("in_general_position", [](const Scene& s) { return check_general_position(s).ok(); })
        .def("perturbed", [](const Scene& s) { return perturb_until_general_position(s); },
             "Rotated copy in general position and the rotation parameter used")
        .def("__eq__", [](const Scene& a, const Scene& b) { return a == b; });

    py::class_<Graph>(m, "Graph")
        .def(py::init<std::size_t>(), py::arg("n"))
        .def(py::init(&graph_from_edges), py::arg("n"), py::arg("edges"))
        .def_static("from_edge_list", [](const std::string& text) { return parse_edge_list(text); })
        .def("to_edge_list", [](const Graph& g) { return write_edge_list(g); })
        .def_property_readonly("n", &Graph::vertex_count)
        .def("__len__", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("add_edge", &Graph::add_edge)
        .def("remove_edge", &Graph::remove_edge)
        .def("has_edge", &Graph::has_edge)
        .def("degree", &Graph::degree)
        .def("max_degree", [](const Graph& g) { return degree_report(g).max_degree; })
        .def("neighbors", [](const Graph& g, std::size_t u) {
            const auto& n = g.neighbors(u);
            return std::vector<std::size_t>(n.begin(), n.end());
        })
        .def("is_subgraph_of", &Graph::is_subgraph_of)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; });

    m.def("generate",
          [](std::size_t n_points, std::size_t n_obstacles, std::size_t obstacle_size, std::int64_t bbox,
             std::uint64_t seed) {
              GeneratorConfig c;
              c.n_points = n_points;
              c.n_obstacles = n_obstacles;
              c.obstacle_size = obstacle_size;
              c.bbox = bbox;
              c.seed = seed;
              return generate(c);
          },
          py::arg("n_points"), py::arg("n_obstacles") = 0, py::arg("obstacle_size") = 4, py::arg("bbox") = 1000,
          py::arg("seed") = 1);

    m.def("build", [](const Scene& s, const std::string& kind) { return build_graph(s, kind_of(kind)); },
          py::arg("scene"), py::arg("graph"), "Construct vis, ginf, g15, g10 or g7");
    m.def("build_all", [](const Scene& s) {
        SpannerSet all = build_all(s);
        py::dict d;
        d["vis"] = all.vis;
        d["ginf"] = all.ginf;
        d["g15"] = all.g15;
        d["g10"] = all.g10;
        d["g7"] = all.g7;
        return d;
    });
    m.def("oracle_g_infinity", &oracle_g_infinity);
    m.def("visible", &visible, py::arg("scene"), py::arg("u"), py::arg("v"));

    m.def("stretch_factor",
          [](const Scene& s, const Graph& sub, const Graph& base) {
              const StretchReport r = stretch_factor(s, sub, base);
              return py::make_tuple(r.max_ratio, r.witness_pair);
          },
          py::arg("scene"), py::arg("sub"), py::arg("base"),
          "Worst ratio of sub over base distances and the pair attaining it");
    m.def("is_plane", [](const Scene& s, const Graph& g) { return check_planarity(s, g).ok(); });

    m.def("verify",
          [](const Scene& s, const std::map<std::string, Graph>& graphs) {
              GraphOverrides overrides;
              for (const auto& [name, g] : graphs) overrides.slot(kind_of(name)) = g;
              const SuiteReport report = run_suite(s, overrides);
              py::list out;
              for (const auto& c : report.checks) {
                  py::dict d;
                  d["name"] = c.name;
                  d["passed"] = c.passed;
                  d["witnesses"] = c.witnesses;
                  out.append(d);
              }
              return out;
          },
          py::arg("scene"), py::arg("graphs") = std::map<std::string, Graph>{},
          "Run every property check; graphs maps names to graphs checked in place of the built ones");

    m.def("render_svg",
          [](const Scene& s, const Graph& g, bool labels) {
              SvgOptions options;
              options.label_vertices = labels;
              return render_svg(s, g, options);
          },
          py::arg("scene"), py::arg("graph"), py::arg("labels") = false);
}
