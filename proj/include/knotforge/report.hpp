#pragma once

#include <string>
#include <utility>
#include <vector>

#include "knotforge/diagram.hpp"
#include "knotforge/fixtures.hpp"

namespace knotforge {

// Ordered key/value pairs describing one diagram.
using Report = std::vector<std::pair<std::string, std::string>>;

Report analyze(const KnotDiagram& d);
std::string format_key_value(const Report& r);
std::string format_pretty(const Report& r);

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CaseResult> cases;
  int passed() const;
  bool all_pass() const { return passed() == static_cast<int>(cases.size()); }
};

// Suites:
//   phi-dual       dual of Phi is isomorphic to the Seifert graph
//   seifert-tait   flat diagrams have a Tait graph isomorphic to the Seifert graph
//   surface-genus  word surface has v = s and the canonical genus
//   seifert-graph  Seifert graphs are connected and bipartite; non-flat gives a
//                  cut vertex; prime reduced diagrams are flat iff the graph is a block
//   synthesis      every trivalent planar generator with a bieulerian path gives
//                  a one-component flat alternating diagram (v_max = max_crossings)
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& suite, const std::vector<Fixture>& corpus, int max_crossings);

}  // namespace knotforge
