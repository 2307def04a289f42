#include "doctest.h"
#include "knotforge/enumerate.hpp"
#include "oracles.hpp"

using namespace knotforge;

namespace {

MultiGraph k33() {
  MultiGraph g(6);
  for (int a = 0; a < 3; ++a) {
    for (int b = 3; b < 6; ++b) g.add_edge(a, b);
  }
  return g;
}

}  // namespace

TEST_SUITE("graph_core") {
  TEST_CASE("cubic multigraph oracle counts") {
    CHECK(oracle::cubic_multigraphs(2).size() == 2);
    CHECK(oracle::cubic_multigraphs(4).size() == 5);
    CHECK(oracle::cubic_multigraphs(6).size() == 17);
  }

  TEST_CASE("planar trivalent enumeration matches the oracle") {
    const auto planar = enumerate_trivalent_planar(6);
    CHECK(planar.size() == 23);
    for (int v : {2, 4, 6}) {
      std::vector<MultiGraph> ours;
      for (const auto& g : planar) {
        if (g.vertex_count() == v) ours.push_back(g.graph());
      }
      const auto all = oracle::cubic_multigraphs(v);
      int missing = 0;
      for (const auto& h : all) {
        const bool present = std::any_of(ours.begin(), ours.end(), [&](const MultiGraph& g) { return oracle::isomorphic(g, h); });
        if (!present) {
          ++missing;
          CHECK(oracle::isomorphic(h, k33()));
        }
      }
      CHECK(static_cast<int>(ours.size()) + missing == static_cast<int>(all.size()));
      CHECK(missing == (v == 6 ? 1 : 0));
    }
    for (std::size_t i = 0; i < planar.size(); ++i) {
      CHECK(planar[i].is_spherical());
      CHECK(planar[i].graph().is_connected());
      for (int d : planar[i].graph().degrees()) CHECK(d == 3);
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(are_isomorphic(planar[i].graph(), planar[j].graph()));
    }
  }

  TEST_CASE("named graphs are found") {
    const auto planar = enumerate_trivalent_planar(6);
    for (const auto& want : {graphs::theta(), graphs::dumbbell(), graphs::k4(), graphs::prism()}) {
      CHECK(std::any_of(planar.begin(), planar.end(), [&](const PlaneGraph& g) { return are_isomorphic(g.graph(), want.graph()); }));
    }
  }

  TEST_CASE("plane embeddings") {
    CHECK_FALSE(find_plane_embedding(k33()).has_value());
    const auto k = find_plane_embedding(graphs::k4().graph());
    REQUIRE(k.has_value());
    CHECK(k->is_spherical());
    CHECK(are_plane_isomorphic(*k, graphs::k4(), true));
  }

  TEST_CASE("range checks") {
    CHECK(enumerate_trivalent_planar(1).empty());
    CHECK(enumerate_trivalent_planar(2).size() == 2);
    CHECK_THROWS_AS(enumerate_trivalent_planar(12), std::invalid_argument);
  }
}
