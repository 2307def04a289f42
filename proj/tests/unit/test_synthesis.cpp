#include "doctest.h"
#include "knotforge/enumerate.hpp"
#include "knotforge/seifert.hpp"
#include "knotforge/synthesis.hpp"
#include "knotforge/wicks.hpp"

using namespace knotforge;

namespace {

constexpr auto acw = VertexOrientation::anticlockwise;
constexpr auto cw = VertexOrientation::clockwise;

// Proper orientation from a bipartition.
OrientedPlaneGraph proper(const PlaneGraph& g) {
  std::vector<int> side;
  REQUIRE(is_bipartite(g.graph(), &side));
  OrientedPlaneGraph o{g, {}};
  for (int s : side) o.orientation.push_back(s == 0 ? acw : cw);
  return o;
}

int subdivisions(const PlaneGraph& g, const std::vector<int>& path) {
  return subdivide({g, path_orientations(g, path)}).graph.vertex_count() - g.vertex_count();
}

}  // namespace

TEST_SUITE("synthesis") {
  TEST_CASE("theta gives the trefoil") {
    const KnotDiagram d = graph_to_link({graphs::theta(), {acw, cw}});
    CHECK(d.crossing_count() == 3);
    CHECK(is_flat(d));
    CHECK(canonical_genus(d) == 1);
    CHECK(is_alternating(d));
    CHECK(serialize_gauss(d.code()) == "O1- U2- O3- U1- O2- U3-");
  }

  TEST_CASE("single edge gives the kink") {
    const KnotDiagram d = graph_to_link({graphs::single_edge(), {acw, cw}});
    CHECK(d.crossing_count() == 1);
    CHECK(are_isomorphic(seifert_graph(d), graphs::single_edge().graph()));
  }

  TEST_CASE("subdivision") {
    const OrientedPlaneGraph same{graphs::theta(), {acw, acw}};
    const OrientedPlaneGraph q = subdivide(same);
    CHECK(q.graph.vertex_count() == 5);
    CHECK(q.graph.edge_count() == 6);
    CHECK(q.graph.is_spherical());
    for (const auto& e : q.graph.graph().edges()) CHECK(q.orientation[e.u] != q.orientation[e.v]);
    // The subdivided theta is the Seifert graph of the (2,2,2) pretzel link.
    try {
      graph_to_link(same);
      FAIL("expected a link");
    } catch (const MultiComponent& e) {
      CHECK(e.components() == 3);
    }
    const OrientedPlaneGraph already = subdivide({graphs::theta(), {acw, cw}});
    CHECK(already.graph.vertex_count() == 2);
  }

  TEST_CASE("links are rejected") {
    try {
      graph_to_link({graphs::dipole(2), {acw, cw}});
      FAIL("expected a link");
    } catch (const MultiComponent& e) {
      CHECK(e.components() == 2);
    }
  }

  TEST_CASE("inverse Seifert round trip") {
    for (const auto& g : {graphs::theta(), graphs::dipole(5), graphs::cycle(4), graphs::cycle(6), graphs::single_edge(),
                          graphs::dipole(4), graphs::cycle(2)}) {
      const OrientedPlaneGraph o = proper(g);
      try {
        const KnotDiagram d = graph_to_link(o);
        CHECK(are_isomorphic(seifert_graph(d), g.graph()));
        CHECK(is_alternating(d));
        CHECK(is_flat(d));
      } catch (const MultiComponent&) {
        // Even edge counts on a cycle close up into links.
      }
    }
    for (const auto& g : enumerate_trivalent_planar(6)) {
      for (std::uint32_t mask = 0; mask < (1u << g.vertex_count()); ++mask) {
        OrientedPlaneGraph o{g, {}};
        for (int v = 0; v < g.vertex_count(); ++v) o.orientation.push_back(mask >> v & 1 ? acw : cw);
        try {
          const KnotDiagram d = graph_to_link(o);
          CHECK(are_isomorphic(seifert_graph(d), subdivide(o).graph.graph()));
          CHECK(is_alternating(d));
        } catch (const MultiComponent&) {
        }
      }
    }
  }

  TEST_CASE("bieulerian generators give one-component flat alternating knots") {
    int with_path = 0;
    for (const auto& g : enumerate_trivalent_planar(6)) {
      const auto path = find_bieulerian(g.graph());
      if (!path) continue;
      ++with_path;
      const KnotDiagram d = trivalent_to_flat_knot(g, *path);
      CHECK(is_flat(d));
      CHECK(is_alternating(d));
      CHECK(canonical_genus(d) == (g.edge_count() - g.vertex_count() + 1) / 2);
      CHECK(d.crossing_count() == g.edge_count() + subdivisions(g, *path));
    }
    CHECK(with_path > 0);
  }

  TEST_CASE("theta path re-reads its word") {
    const PlaneGraph g = graphs::theta();
    const auto path = find_bieulerian(g.graph());
    REQUIRE(path.has_value());
    CHECK(subdivisions(g, *path) == 0);
    const KnotDiagram d = trivalent_to_flat_knot(g, *path);
    CHECK(dihedral_canonical(diagram_to_word(d)) == dihedral_canonical(path_word(*path)));
    CHECK(are_isomorphic(word_to_surface(diagram_to_word(d)).graph, g.graph()));
  }

  TEST_CASE("prism") {
    const PlaneGraph g = graphs::prism();
    const auto path = find_bieulerian(g.graph());
    REQUIRE(path.has_value());
    const KnotDiagram d = trivalent_to_flat_knot(g, *path);
    CHECK(canonical_genus(d) == 2);
    CHECK(is_flat(d));
    CHECK(is_alternating(d));
    CHECK(equivalence_classes(diagram_to_word(d)).size() == 9);
    CHECK(d.crossing_count() == 9 + subdivisions(g, *path));
  }

  TEST_CASE("K4 has no path") {
    CHECK_FALSE(find_bieulerian(graphs::k4().graph()).has_value());
    CHECK_THROWS_AS(trivalent_to_flat_knot(graphs::k4(), {0, 1, 2}), std::invalid_argument);
  }
}
