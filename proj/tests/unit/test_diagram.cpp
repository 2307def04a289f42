#include "doctest.h"
#include "knotforge/diagram.hpp"
#include "knotforge/fixtures.hpp"
#include "oracles.hpp"

using namespace knotforge;

TEST_SUITE("diagram") {
  TEST_CASE("trefoil map") {
    const KnotDiagram d = from_gauss("O1+ U2+ O3+ U1+ O2+ U3+");
    CHECK(d.crossing_count() == 3);
    CHECK(d.map().vertex_count() == 3);
    CHECK(d.map().edge_count() == 6);
    CHECK(d.faces().count() == 5);
    for (int c = 0; c < 3; ++c) {
      CHECK(d.sign(c) == Sign::plus);
      const Ports& p = d.ports(c);
      CHECK(d.slot(c, 0) == p.under_in);
      CHECK(d.slot(c, 1) == p.over_in);
      CHECK(d.slot(c, 2) == p.under_out);
      CHECK(d.slot(c, 3) == p.over_out);
    }
    CHECK(is_alternating(d));
    CHECK(is_reduced(d));
  }

  TEST_CASE("negative rotation") {
    const KnotDiagram d = from_gauss("O1- U2- O3- U1- O2- U3-");
    const Ports& p = d.ports(0);
    CHECK(d.slot(0, 0) == p.over_in);
    CHECK(d.slot(0, 1) == p.under_in);
    CHECK(d.slot(0, 2) == p.over_out);
    CHECK(d.slot(0, 3) == p.under_out);
  }

  TEST_CASE("kink") {
    const KnotDiagram d = from_gauss("O1+ U1+");
    CHECK(d.faces().count() == 3);
    CHECK_FALSE(is_reduced(d));
    CHECK(is_alternating(d));
  }

  TEST_CASE("trefoil with kink is not reduced") {
    CHECK_FALSE(is_reduced(from_gauss("O1+ U2+ O3+ U1+ O2+ U3+ O4+ U4+")));
  }

  TEST_CASE("non-realizable codes") {
    CHECK_THROWS_AS(from_gauss("O1+ U2+ U1+ O2+"), NonRealizable);
    CHECK_THROWS_AS(from_gauss("O1- O2- U1- U2-"), NonRealizable);
    CHECK(oracle::face_count(parse_gauss("O1+ U2+ U1+ O2+")) != 4);
  }

  TEST_CASE("non-alternating realizable code") {
    const KnotDiagram d = from_gauss("O1+ U2+ O3+ O4+ U4+ U1+ O2+ U3+");
    CHECK_FALSE(is_alternating(d));
    CHECK(d.faces().count() == 6);
  }

  TEST_CASE("corpus: Euler counts, ports and mirror") {
    for (const auto& f : load_fixtures(KNOTFORGE_TEST_FIXTURES)) {
      CAPTURE(f.name);
      const auto code = parse_gauss(f.gauss);
      const KnotDiagram d = from_gauss(code);
      const int n = d.crossing_count();
      CHECK(d.map().vertex_count() == n);
      CHECK(d.map().edge_count() == 2 * n);
      CHECK(d.faces().count() == n + 2);
      CHECK(oracle::face_count(code) == n + 2);
      for (int p = 0; p < 2 * n; ++p) {
        CHECK(d.partner(d.partner(p)) == p);
        CHECK(d.crossing_at(d.partner(p)) == d.crossing_at(p));
        CHECK(d.strand_at(d.partner(p)) != d.strand_at(p));
      }
      // A face meeting a crossing in two opposite corners makes it nugatory.
      bool nugatory = false;
      for (int c = 0; c < n; ++c) {
        nugatory |= d.corner_face(c, 0) == d.corner_face(c, 2) || d.corner_face(c, 1) == d.corner_face(c, 3);
      }
      CHECK(nugatory == !is_reduced(d));
      const KnotDiagram m = from_gauss(code.mirror());
      CHECK(m.faces().count() == n + 2);
      CHECK(are_plane_isomorphic(m.map(), d.map().mirror()));
    }
  }

  TEST_CASE("corpus maps are pairwise distinct") {
    std::vector<std::pair<std::string, KnotDiagram>> ds;
    for (const auto& f : load_fixtures(KNOTFORGE_TEST_FIXTURES)) ds.emplace_back(f.name, from_gauss(f.gauss));
    for (std::size_t i = 0; i < ds.size(); ++i) {
      for (std::size_t j = i + 1; j < ds.size(); ++j) {
        if (ds[i].second.crossing_count() != ds[j].second.crossing_count()) continue;
        CAPTURE(ds[i].first);
        CAPTURE(ds[j].first);
        CHECK_FALSE(are_plane_isomorphic(ds[i].second.map(), ds[j].second.map(), true));
      }
    }
  }
}
