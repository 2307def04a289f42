#include "doctest.h"
#include "knotforge/fixtures.hpp"
#include "knotforge/seifert.hpp"
#include "oracles.hpp"

using namespace knotforge;

namespace {

const char* trefoil = "O1+ U2+ O3+ U1+ O2+ U3+";
const char* trefoil_kink = "O1+ U2+ O3+ U1+ O2+ U3+ O4+ U4+";

std::string gauss_of(const std::string& name) {
  for (const auto& f : load_fixtures(KNOTFORGE_TEST_FIXTURES)) {
    if (f.name == name) return f.gauss;
  }
  throw std::runtime_error("no fixture " + name);
}

}  // namespace

TEST_SUITE("seifert") {
  TEST_CASE("circle counts") {
    CHECK(splice_all(from_gauss(trefoil)).circle_count() == 2);
    CHECK(splice_all(from_gauss(gauss_of("4_1"))).circle_count() == 3);
    CHECK(splice_all(from_gauss("O1+ U1+")).circle_count() == 2);
  }

  TEST_CASE("types") {
    const KnotDiagram t = from_gauss(trefoil);
    const auto dec = classify_circles(splice_all(t), t, 0);
    CHECK(dec.types == std::vector<CircleType>{CircleType::I, CircleType::I});
    CHECK(is_flat(t));

    const KnotDiagram e = from_gauss(gauss_of("4_1"));
    const auto de = classify_circles(splice_all(e), e, 0);
    CHECK(std::count(de.types.begin(), de.types.end(), CircleType::II) >= 1);
    CHECK_FALSE(is_flat(e));

    CHECK(is_flat(from_gauss("O1+ U1+")));
    CHECK(is_flat(from_gauss(gauss_of("5_1"))));
  }

  TEST_CASE("Seifert graphs") {
    CHECK(are_isomorphic(seifert_graph(from_gauss(trefoil)), graphs::dipole(3).graph()));
    const MultiGraph fig8 = seifert_graph(from_gauss(gauss_of("4_1")));
    CHECK(are_isomorphic(fig8, MultiGraph(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}})));
    CHECK_FALSE(blocks_and_cut_vertices(fig8).cut_vertices.empty());
    CHECK(are_isomorphic(seifert_graph(from_gauss("O1+ U1+")), graphs::single_edge().graph()));
    CHECK_FALSE(seifert_plane_graph(from_gauss(gauss_of("4_1"))).has_value());
  }

  TEST_CASE("genus") {
    CHECK(canonical_genus(from_gauss(trefoil)) == 1);
    CHECK(canonical_genus(from_gauss("O1+ U1+")) == 0);
  }

  TEST_CASE("trefoil with kink: flat, not reduced, cut vertex") {
    const KnotDiagram d = from_gauss(trefoil_kink);
    CHECK(is_flat(d));
    CHECK_FALSE(is_reduced(d));
    CHECK_FALSE(blocks_and_cut_vertices(seifert_graph(d)).cut_vertices.empty());
  }

  TEST_CASE("corpus properties") {
    for (const auto& f : load_fixtures(KNOTFORGE_TEST_FIXTURES)) {
      CAPTURE(f.name);
      const KnotDiagram d = from_gauss(f.gauss);
      const auto dec = splice_all(d);
      const auto label = oracle::seifert_labels(d);
      const int s = oracle::seifert_circles(d);
      CHECK(dec.circle_count() == s);
      // Same partition of the arcs, possibly renumbered.
      for (int a = 0; a < d.arc_count(); ++a) {
        for (int b = 0; b < d.arc_count(); ++b) {
          CHECK((dec.circle_of_arc[a] == dec.circle_of_arc[b]) == (label[a] == label[b]));
        }
      }
      std::vector<int> seen(d.arc_count(), 0);
      for (const auto& circle : dec.circles) {
        for (int k : circle) ++seen[k];
      }
      for (int k : seen) CHECK(k == 1);
      for (const auto& [a, b] : dec.crossing_links) CHECK(a != b);

      CHECK((d.crossing_count() - s + 1) % 2 == 0);
      CHECK(canonical_genus(d) == f.genus);

      const MultiGraph g = seifert_graph(d);
      CHECK(g.is_connected());
      CHECK(is_bipartite(g));

      const bool flat = is_flat(d);
      bool oracle_flat = true;
      for (int c = 0; c < s; ++c) oracle_flat &= oracle::circle_is_type_one(d, label, c);
      CHECK(flat == oracle_flat);

      const auto blocks = blocks_and_cut_vertices(g);
      if (!flat) CHECK_FALSE(blocks.cut_vertices.empty());
      if (f.prime && is_reduced(d)) CHECK(flat == blocks.is_block());

      if (flat) {
        const auto pg = seifert_plane_graph(d);
        REQUIRE(pg.has_value());
        CHECK(pg->is_spherical());
        CHECK(are_isomorphic(pg->graph(), g));
        // A root face with every height zero exists.
        bool found = false;
        for (int r = 0; r < d.faces().count() && !found; ++r) {
          const auto h = classify_circles(dec, d, r).heights;
          found = std::all_of(h.begin(), h.end(), [](int x) { return x == 0; });
        }
        CHECK(found);
      }
      for (int r = 0; r < d.faces().count(); ++r) {
        const auto c = classify_circles(dec, d, r);
        CHECK(c.types == classify_circles(dec, d, 0).types);
        CHECK(*std::min_element(c.heights.begin(), c.heights.end()) == 0);
      }
    }
  }
}
