#include "knotforge/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "knotforge/census.hpp"
#include "knotforge/enumerate.hpp"
#include "knotforge/seifert.hpp"
#include "knotforge/synthesis.hpp"
#include "knotforge/tait.hpp"
#include "knotforge/wicks.hpp"

namespace knotforge {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string shape(const MultiGraph& g) {
  return std::to_string(g.vertex_count()) + "v/" + std::to_string(g.edge_count()) + "e";
}

TaitPair classified_pair(const KnotDiagram& d) { return classify_cd_edges(d, tait_graphs(d, checkerboard(d))); }

CaseResult check_phi_dual(const std::string& name, const KnotDiagram& d) {
  const MultiGraph dual_phi = phi_dual(build_phi(d, classified_pair(d)));
  const MultiGraph s = seifert_graph(d);
  const bool ok = are_isomorphic(dual_phi, s);
  return {name, ok, ok ? "" : "phi dual " + shape(dual_phi) + " vs Seifert " + shape(s)};
}

CaseResult check_surface(const std::string& name, const KnotDiagram& d) {
  const auto surf = word_to_surface(diagram_to_word(d));
  const int s = splice_all(d).circle_count();
  const int g = canonical_genus(d);
  const bool ok = surf.summary.v == s && surf.summary.genus == g;
  return {name, ok,
          "v=" + std::to_string(surf.summary.v) + " s=" + std::to_string(s) + " genus=" +
              std::to_string(surf.summary.genus) + " canonical=" + std::to_string(g)};
}

CaseResult check_seifert_graph(const std::string& name, const KnotDiagram& d, bool prime) {
  const MultiGraph s = seifert_graph(d);
  const bool flat = is_flat(d);
  std::string why;
  if (!s.is_connected()) why += "disconnected; ";
  if (!is_bipartite(s)) why += "not bipartite; ";
  const auto blocks = blocks_and_cut_vertices(s);
  if (!flat && blocks.cut_vertices.empty()) why += "non-flat without cut vertex; ";
  if (prime && is_reduced(d) && flat != blocks.is_block()) why += "flat and block disagree; ";
  if (flat) {
    const auto plane = seifert_plane_graph(d);
    if (!plane || !plane->is_spherical()) why += "flat embedding fails Euler; ";
  }
  return {name, why.empty(), why};
}

}  // namespace

Report analyze(const KnotDiagram& d) {
  Report r;
  const auto dec = splice_all(d);
  const MultiGraph s = seifert_graph(d);
  const TaitPair tp = classified_pair(d);
  const CyclicWord w = canonical(diagram_to_word(d));
  const WicksVerdict wv = is_wicks(w);
  const bool flat = is_flat(d);
  r.emplace_back("code", serialize_gauss(d.code()));
  r.emplace_back("n", std::to_string(d.crossing_count()));
  r.emplace_back("s", std::to_string(dec.circle_count()));
  r.emplace_back("g", std::to_string(canonical_genus(d)));
  r.emplace_back("faces", std::to_string(d.faces().count()));
  r.emplace_back("alternating", yes_no(is_alternating(d)));
  r.emplace_back("reduced", yes_no(is_reduced(d)));
  r.emplace_back("flat", yes_no(flat));
  r.emplace_back("seifert_graph", shape(s));
  r.emplace_back("seifert_bipartite", yes_no(is_bipartite(s)));
  r.emplace_back("seifert_block", yes_no(blocks_and_cut_vertices(s).is_block()));
  r.emplace_back("tait_T", shape(tp.T.graph()));
  r.emplace_back("tait_T_star", shape(tp.T_star.graph()));
  const auto c_edges = std::count(tp.classes.begin(), tp.classes.end(), EdgeClass::c);
  r.emplace_back("c_edges", std::to_string(c_edges));
  r.emplace_back("d_edges", std::to_string(d.crossing_count() - c_edges));
  r.emplace_back("seifert_tait", yes_no(seifert_tait_check(d)));
  r.emplace_back("word", serialize_word(w));
  r.emplace_back("wicks", wv.ok ? "yes" : "no (violates (" + std::string(wv.violated == 1 ? "i" : wv.violated == 2 ? "ii" : "iii") + "))");
  const auto surf = word_to_surface(w);
  r.emplace_back("surface", "v=" + std::to_string(surf.summary.v) + " e=" + std::to_string(surf.summary.e) +
                                " euler=" + std::to_string(surf.summary.euler) +
                                " genus=" + std::to_string(surf.summary.genus));
  r.emplace_back("classes", std::to_string(equivalence_classes(w).size()));
  return r;
}

std::string format_key_value(const Report& r) {
  std::string out;
  for (const auto& [k, v] : r) out += k + "=" + v + "\n";
  return out;
}

std::string format_pretty(const Report& r) {
  std::size_t width = 0;
  for (const auto& kv : r) width = std::max(width, kv.first.size());
  std::ostringstream os;
  for (const auto& [k, v] : r) os << "  " << k << std::string(width - k.size() + 2, ' ') << v << "\n";
  return os.str();
}

int SuiteResult::passed() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; }));
}

std::vector<std::string> suite_names() {
  return {"phi-dual", "seifert-tait", "surface-genus", "seifert-graph", "synthesis"};
}

SuiteResult run_suite(const std::string& suite, const std::vector<Fixture>& corpus, int max_crossings) {
  SuiteResult out;
  out.suite = suite;
  if (suite == "synthesis") {
    for (const auto& r : enumerate_flat_knots(max_crossings)) {
      const bool ok = r.one_component && r.flat && r.alternating;
      out.cases.push_back({"generator" + std::to_string(r.generator_id) + "(" + shape(r.generator.graph()) + ")", ok,
                           "crossings=" + std::to_string(r.crossings) + " genus=" + std::to_string(r.genus)});
    }
    return out;
  }
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  for (const auto& f : corpus) {
    const KnotDiagram d = from_gauss(f.gauss);
    if (d.crossing_count() > max_crossings) continue;
    if (suite == "phi-dual") {
      out.cases.push_back(check_phi_dual(f.name, d));
    } else if (suite == "seifert-tait") {
      if (!is_flat(d)) continue;
      out.cases.push_back({f.name, seifert_tait_check(d), ""});
    } else if (suite == "surface-genus") {
      out.cases.push_back(check_surface(f.name, d));
    } else {
      out.cases.push_back(check_seifert_graph(f.name, d, f.prime));
    }
  }
  return out;
}

}  // namespace knotforge
