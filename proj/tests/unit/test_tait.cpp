#include "doctest.h"
#include "knotforge/fixtures.hpp"
#include "knotforge/seifert.hpp"
#include "knotforge/tait.hpp"

using namespace knotforge;

namespace {

std::string gauss_of(const std::string& name) {
  for (const auto& f : load_fixtures(KNOTFORGE_TEST_FIXTURES)) {
    if (f.name == name) return f.gauss;
  }
  throw std::runtime_error("no fixture " + name);
}

TaitPair classified(const KnotDiagram& d) { return classify_cd_edges(d, tait_graphs(d, checkerboard(d))); }

int count_class(const TaitPair& p, EdgeClass k) { return static_cast<int>(std::count(p.classes.begin(), p.classes.end(), k)); }

}  // namespace

TEST_SUITE("tait") {
  TEST_CASE("checkerboard") {
    const KnotDiagram t = from_gauss("O1+ U2+ O3+ U1+ O2+ U3+");
    const Coloring col = checkerboard(t);
    CHECK(col.size() == 5);
    const auto black = std::count(col.begin(), col.end(), Color::black);
    CHECK((black == 2 || black == 3));
    CHECK(col[t.faces().face_of_dart[0]] == Color::white);
    CHECK(checkerboard(from_gauss("O1+ U1+")).size() == 3);
  }

  TEST_CASE("trefoil Tait pair") {
    const KnotDiagram t = from_gauss("O1+ U2+ O3+ U1+ O2+ U3+");
    const TaitPair p = classified(t);
    const bool tri_black = are_isomorphic(p.T.graph(), graphs::cycle(3).graph());
    const MultiGraph other = tri_black ? p.T_star.graph() : p.T.graph();
    CHECK(are_isomorphic(tri_black ? p.T.graph() : p.T_star.graph(), graphs::cycle(3).graph()));
    CHECK(are_isomorphic(other, graphs::dipole(3).graph()));
    CHECK((count_class(p, EdgeClass::c) == 3 || count_class(p, EdgeClass::d) == 3));
  }

  TEST_CASE("figure-eight has both classes and a split Phi") {
    const KnotDiagram d = from_gauss(gauss_of("4_1"));
    const TaitPair p = classified(d);
    CHECK(count_class(p, EdgeClass::c) > 0);
    CHECK(count_class(p, EdgeClass::d) > 0);
    CHECK(build_phi(d, p).components.size() >= 2);
    CHECK(are_isomorphic(phi_dual(build_phi(d, p)), MultiGraph(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}})));
  }

  TEST_CASE("8_11 has 8 edges and both classes") {
    const KnotDiagram d = from_gauss(gauss_of("8_11"));
    const TaitPair p = classified(d);
    CHECK(p.T.edge_count() == 8);
    CHECK(p.T_star.edge_count() == 8);
    CHECK(p.T.vertex_count() + p.T_star.vertex_count() == 10);
    CHECK(count_class(p, EdgeClass::c) > 0);
    CHECK(count_class(p, EdgeClass::d) > 0);
    CHECK(are_isomorphic(phi_dual(build_phi(d, p)), seifert_graph(d)));
  }

  TEST_CASE("corpus properties") {
    for (const auto& f : load_fixtures(KNOTFORGE_TEST_FIXTURES)) {
      CAPTURE(f.name);
      const KnotDiagram d = from_gauss(f.gauss);
      const int n = d.crossing_count();
      const Coloring col = checkerboard(d);
      for (int k = 0; k < d.arc_count(); ++k) {
        CHECK(col[d.faces().face_of_dart[2 * k]] != col[d.faces().face_of_dart[2 * k + 1]]);
      }
      // Rooting at a dart of the other colour swaps every face.
      int other_root = 0;
      while (col[d.faces().face_of_dart[other_root]] == Color::white) ++other_root;
      const Coloring swapped = checkerboard(d, other_root);
      for (std::size_t i = 0; i < col.size(); ++i) CHECK(swapped[i] != col[i]);

      const TaitPair p = classify_cd_edges(d, tait_graphs(d, col));
      CHECK(p.T.edge_count() == n);
      CHECK(p.T_star.edge_count() == n);
      CHECK(p.T.is_spherical());
      CHECK(are_plane_isomorphic(p.T_star, dual(p.T), true));
      CHECK(are_isomorphic(p.T_star.graph(), dual(p.T).graph()));

      const PhiGraph phi = build_phi(d, p);
      std::vector<int> hits(n, 0);
      for (const auto& comp : phi.components) {
        CHECK(comp.graph.graph().is_connected());
        for (int deg : comp.graph.graph().degrees()) CHECK(deg % 2 == 0);
        for (int c : comp.crossing_of_edge) ++hits[c];
        for (std::size_t e = 0; e < comp.crossing_of_edge.size(); ++e) {
          const EdgeClass want = comp.in_T ? EdgeClass::c : EdgeClass::d;
          CHECK(p.classes[comp.crossing_of_edge[e]] == want);
        }
      }
      for (int h : hits) CHECK(h == 1);

      const MultiGraph s = seifert_graph(d);
      CHECK(are_isomorphic(phi_dual(phi), s));

      if (is_flat(d)) {
        CHECK((count_class(p, EdgeClass::c) == n || count_class(p, EdgeClass::d) == n));
        CHECK((are_isomorphic(s, p.T.graph()) || are_isomorphic(s, p.T_star.graph())));
      }
    }
  }
}
