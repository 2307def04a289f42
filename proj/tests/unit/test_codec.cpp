#include "doctest.h"
#include "json.hpp"
#include "knotforge/fixtures.hpp"
#include "knotforge/gauss_code.hpp"
#include "knotforge/graph_io.hpp"

using namespace knotforge;

TEST_SUITE("codec") {
  TEST_CASE("parse trefoil and kink") {
    const auto t = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+");
    CHECK(t.crossing_count() == 3);
    CHECK(t[0] == GaussEntry{1, Strand::over, Sign::plus});
    CHECK(t[3] == GaussEntry{1, Strand::under, Sign::plus});
    CHECK(parse_gauss("O1+ U1+").crossing_count() == 1);
  }

  TEST_CASE("invariant violations") {
    CHECK_THROWS_AS(parse_gauss("O1+ O1+"), ParseError);
    CHECK_THROWS_AS(parse_gauss("O1+ U1-"), ParseError);
    CHECK_THROWS_AS(parse_gauss("O1+ U1+ O1+"), ParseError);
    CHECK_THROWS_AS(parse_gauss(""), ParseError);
    CHECK_THROWS_AS(parse_gauss("O1+ U2+"), ParseError);
  }

  TEST_CASE("syntax errors carry the token index") {
    try {
      parse_gauss("O1+ U2+ X3+ U1+");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.token() == 2);
    }
    for (const char* bad : {"O1", "O+", "1+", "O1*", "O01x+", "o1+"}) {
      CHECK_THROWS_AS(parse_gauss(bad), ParseError);
    }
  }

  TEST_CASE("serialize canonicalizes labels") {
    CHECK(serialize_gauss(parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+")) == "O1+ U2+ O3+ U1+ O2+ U3+");
    CHECK(serialize_gauss(parse_gauss("O1+ U1+")) == "O1+ U1+");
    CHECK(serialize_gauss(parse_gauss("O5+ U9+ O7+ U5+ O9+ U7+")) == "O1+ U2+ O3+ U1+ O2+ U3+");
    CHECK(serialize_gauss(parse_gauss("  U7-\tO3-  O7- U3- ")) == "U1- O2- O1- U2-");
  }

  TEST_CASE("round trip over the corpus") {
    for (const auto& f : load_fixtures(KNOTFORGE_TEST_FIXTURES)) {
      CAPTURE(f.name);
      const auto c = parse_gauss(f.gauss);
      CHECK(parse_gauss(serialize_gauss(c)) == c.canonical());
      CHECK(serialize_gauss(parse_gauss(serialize_gauss(c))) == serialize_gauss(c));
      CHECK(c.mirror().mirror() == c);
    }
  }

  TEST_CASE("graph JSON export") {
    using nlohmann::json;
    const json dip = json::parse(export_graph(graphs::dipole(3).graph(), GraphFormat::json));
    CHECK(dip["vertices"].size() == 2);
    CHECK(dip["edges"].size() == 3);
    for (const auto& e : dip["edges"]) {
      CHECK(e["u"] == 0);
      CHECK(e["v"] == 1);
    }
    CHECK_FALSE(dip.contains("rotations"));

    const json th = json::parse(export_graph(graphs::theta(), GraphFormat::json));
    REQUIRE(th.contains("rotations"));
    CHECK(th["rotations"]["0"] == json({"0a", "1a", "2a"}));
    CHECK(th["rotations"]["1"] == json({"2b", "1b", "0b"}));

    const json single = json::parse(export_graph(MultiGraph(1), GraphFormat::json));
    CHECK(single["vertices"] == json({0}));
    CHECK(single["edges"] == json::array());
  }

  TEST_CASE("graph JSON import round trip") {
    for (const auto& g : {graphs::theta(), graphs::k4(), graphs::prism(), graphs::dumbbell(), graphs::loop()}) {
      const PlaneGraph back = import_plane_graph_json(export_graph(g, GraphFormat::json));
      CHECK(back.rotation() == g.rotation());
      CHECK(back.graph().edges() == g.graph().edges());
    }
    CHECK_THROWS_AS(import_graph_json("{\"vertices\":[0],\"edges\":[{\"id\":0,\"u\":0,\"v\":3}]}"),
                    std::invalid_argument);
    CHECK_THROWS_AS(import_graph_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(import_plane_graph_json("{\"vertices\":[0,1],\"edges\":[{\"id\":0,\"u\":0,\"v\":1}]}"),
                    std::invalid_argument);
  }

  TEST_CASE("DOT keeps parallel edges") {
    const std::string dot = export_graph(graphs::dipole(3), GraphFormat::dot);
    CHECK(dot.rfind("graph {", 0) == 0);
    for (const char* line : {"0 -- 1 [label=\"e0\"]", "0 -- 1 [label=\"e1\"]", "0 -- 1 [label=\"e2\"]"}) {
      CHECK(dot.find(line) != std::string::npos);
    }
  }
}
