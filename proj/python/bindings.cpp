#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "knotforge/census.hpp"
#include "knotforge/diagram.hpp"
#include "knotforge/enumerate.hpp"
#include "knotforge/graph_io.hpp"
#include "knotforge/report.hpp"
#include "knotforge/seifert.hpp"
#include "knotforge/synthesis.hpp"
#include "knotforge/tait.hpp"
#include "knotforge/wicks.hpp"

namespace py = pybind11;
using namespace knotforge;

namespace {

py::dict surface_dict(const SurfaceSummary& s) {
  py::dict d;
  d["v"] = s.v;
  d["e"] = s.e;
  d["euler"] = s.euler;
  d["genus"] = s.genus;
  d["orientable"] = s.orientable;
  return d;
}

std::string to_str(const BigInt& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

PYBIND11_MODULE(_knotforge, m) {
  m.doc() = "Seifert and Tait graphs, Wicks forms and flat knot synthesis";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NonRealizable>(m, "NonRealizable", PyExc_ValueError);
  py::register_exception<MultiComponent>(m, "MultiComponent", PyExc_ValueError);

  py::class_<MultiGraph>(m, "MultiGraph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             MultiGraph g(n);
             for (auto [u, v] : edges) g.add_edge(u, v);
             return g;
           }),
           py::arg("vertex_count"), py::arg("edges"))
      .def_property_readonly("vertex_count", &MultiGraph::vertex_count)
      .def_property_readonly("edge_count", &MultiGraph::edge_count)
      .def("edges", [](const MultiGraph& g) {
        std::vector<std::pair<int, int>> out;
        for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
        return out;
      })
      .def("to_json", [](const MultiGraph& g) { return export_graph(g, GraphFormat::json); })
      .def("to_dot", [](const MultiGraph& g) { return export_graph(g, GraphFormat::dot); });

  py::class_<PlaneGraph>(m, "PlaneGraph")
      .def_static("from_json", &import_plane_graph_json)
      .def_property_readonly("graph", &PlaneGraph::graph)
      .def_property_readonly("vertex_count", &PlaneGraph::vertex_count)
      .def_property_readonly("edge_count", &PlaneGraph::edge_count)
      .def("face_count", [](const PlaneGraph& g) { return g.trace_faces().count(); })
      .def("to_json", [](const PlaneGraph& g) { return export_graph(g, GraphFormat::json); });

  m.def("named_graph", [](const std::string& name) {
    if (name == "theta") return graphs::theta();
    if (name == "k4") return graphs::k4();
    if (name == "prism") return graphs::prism();
    if (name == "dumbbell") return graphs::dumbbell();
    if (name == "loop") return graphs::loop();
    if (name == "single_edge") return graphs::single_edge();
    throw py::value_error("unknown graph " + name);
  });
  m.def("dual", &dual);
  m.def("medial", &medial);
  m.def("are_isomorphic", &are_isomorphic);
  m.def("is_bipartite", [](const MultiGraph& g) { return is_bipartite(g); });
  m.def("is_three_connected", &is_three_connected);
  m.def("enumerate_trivalent_planar", &enumerate_trivalent_planar, py::arg("v_max"));

  m.def("parse_gauss", [](const std::string& s) { return serialize_gauss(parse_gauss(s)); },
        "Parse and return the canonical form of a signed Gauss code");

  py::class_<KnotDiagram>(m, "KnotDiagram")
      .def(py::init([](const std::string& code) { return from_gauss(code); }), py::arg("code"))
      .def_property_readonly("code", [](const KnotDiagram& d) { return serialize_gauss(d.code()); })
      .def_property_readonly("crossing_count", &KnotDiagram::crossing_count)
      .def_property_readonly("face_count", [](const KnotDiagram& d) { return d.faces().count(); })
      .def("is_alternating", &is_alternating)
      .def("is_reduced", &is_reduced)
      .def("is_flat", &is_flat)
      .def("seifert_circle_count", [](const KnotDiagram& d) { return splice_all(d).circle_count(); })
      .def("canonical_genus", &canonical_genus)
      .def("seifert_graph", &seifert_graph)
      .def("tait_graphs", [](const KnotDiagram& d) {
        const TaitPair p = tait_graphs(d, checkerboard(d));
        return py::make_tuple(p.T, p.T_star);
      })
      .def("phi_dual", [](const KnotDiagram& d) {
        return phi_dual(build_phi(d, classify_cd_edges(d, tait_graphs(d, checkerboard(d)))));
      })
      .def("seifert_tait_check", &seifert_tait_check)
      .def("word", [](const KnotDiagram& d) { return serialize_word(canonical(diagram_to_word(d))); })
      .def("analyze", [](const KnotDiagram& d) {
        py::dict out;
        for (const auto& [k, v] : analyze(d)) out[py::str(k)] = v;
        return out;
      });

  m.def("canonical_word", [](const std::string& w) { return serialize_word(canonical(parse_word(w))); });
  m.def("is_wicks", [](const std::string& w) {
    const WicksVerdict v = is_wicks(parse_word(w));
    return py::make_tuple(v.ok, v.violated, v.witness);
  });
  m.def("word_surface", [](const std::string& w) { return surface_dict(word_to_surface(parse_word(w)).summary); });
  m.def("t2_apply", [](const std::string& w, int chord) {
    return serialize_word(t2_apply(parse_word(w), chord));
  }, py::arg("word"), py::arg("chord"));
  m.def("t2_reduce", [](const std::string& w) { return serialize_word(t2_reduce(parse_word(w))); });
  m.def("equivalence_classes", [](const std::string& w) { return equivalence_classes(parse_word(w)); });
  m.def("t2_expand_series", [](const std::string& w, int n) {
    std::vector<std::string> out;
    for (const auto& x : t2_expand_series(parse_word(w), n)) out.push_back(serialize_word(x));
    return out;
  });
  m.def("find_bieulerian", &find_bieulerian);

  m.def("synthesize", [](const PlaneGraph& g) {
    const auto path = find_bieulerian(g.graph());
    if (!path) throw py::value_error("graph has no bieulerian path");
    return trivalent_to_flat_knot(g, *path);
  });
  m.def("graph_to_link", [](const PlaneGraph& g, const std::string& orientation) {
    if (static_cast<int>(orientation.size()) != g.vertex_count()) throw py::value_error("one letter per vertex");
    OrientedPlaneGraph og{g, {}};
    for (char c : orientation) {
      if (c != 'a' && c != 'c') throw py::value_error("orientation letters are a or c");
      og.orientation.push_back(c == 'a' ? VertexOrientation::anticlockwise : VertexOrientation::clockwise);
    }
    return graph_to_link(og);
  });

  m.def("series_count", [](int n, int d) { return py::int_(py::str(to_str(series_count(n, d)))); });
  m.def("strict_series_count",
        [](int n, int n0, int d) { return py::int_(py::str(to_str(strict_series_count(n, n0, d)))); });
  m.def("dominance_lower_bound", [](int n, int g, int c) {
    const Rational r = dominance_lower_bound(n, g, c);
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::int_(py::str(to_str(boost::multiprecision::numerator(r)))),
                    py::int_(py::str(to_str(boost::multiprecision::denominator(r)))));
  });
  m.def("census", [](int v_max) {
    py::list out;
    for (const auto& r : enumerate_flat_knots(v_max)) {
      py::dict d;
      d["generator_id"] = r.generator_id;
      d["v"] = r.v;
      d["e"] = r.e;
      d["genus"] = r.genus;
      d["three_connected"] = r.three_connected;
      d["classes"] = r.classes;
      d["crossings"] = r.crossings;
      d["flat"] = r.flat;
      d["alternating"] = r.alternating;
      d["gauss"] = r.gauss;
      out.append(d);
    }
    return out;
  });
}
