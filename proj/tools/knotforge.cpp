#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "knotforge/census.hpp"
#include "knotforge/diagram.hpp"
#include "knotforge/fixtures.hpp"
#include "knotforge/graph_io.hpp"
#include "knotforge/report.hpp"
#include "knotforge/seifert.hpp"
#include "knotforge/synthesis.hpp"
#include "knotforge/wicks.hpp"

using namespace knotforge;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_analyze(const std::string& code, bool pretty) {
  const KnotDiagram d = from_gauss(code);
  const Report r = analyze(d);
  std::cout << (pretty ? format_pretty(r) : format_key_value(r));
  return 0;
}

int cmd_verify(const std::string& suite, int max, const std::string& fixtures) {
  const auto corpus = load_fixtures(fixtures.empty() ? default_fixture_path() : fixtures);
  std::vector<std::string> suites = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  bool all = true;
  for (const auto& s : suites) {
    const SuiteResult res = run_suite(s, corpus, max);
    for (const auto& c : res.cases) {
      std::cout << s << ' ' << c.name << ' ' << (c.pass ? "pass" : "FAIL");
      if (!c.pass && !c.detail.empty()) std::cout << " (" << c.detail << ')';
      std::cout << '\n';
    }
    std::cout << s << ": " << res.passed() << '/' << res.cases.size() << " pass\n";
    all = all && res.all_pass();
  }
  return all ? 0 : 1;
}

int cmd_wicks_check(const std::string& text, bool pretty) {
  const CyclicWord w = parse_word(text);
  const WicksVerdict v = is_wicks(w);
  Report r;
  r.emplace_back("word", serialize_word(canonical(w)));
  if (v.ok) {
    r.emplace_back("wicks", "yes");
  } else {
    static const char* roman[] = {"", "i", "ii", "iii"};
    r.emplace_back("wicks", "no");
    r.emplace_back("verdict", std::string("not a Wicks form: violates (") + roman[v.violated] + ")");
    r.emplace_back("witness", v.witness);
  }
  if (v.ok || v.violated != 1) {
    try {
      const auto s = word_to_surface(w).summary;
      r.emplace_back("v", std::to_string(s.v));
      r.emplace_back("e", std::to_string(s.e));
      r.emplace_back("euler", std::to_string(s.euler));
      r.emplace_back("genus", std::to_string(s.genus));
      r.emplace_back("orientable", s.orientable ? "yes" : "no");
    } catch (const std::domain_error& e) {
      r.emplace_back("surface", e.what());
    }
  }
  std::cout << (pretty ? format_pretty(r) : format_key_value(r));
  return 0;
}

int cmd_synth(const std::string& graph_file, const std::string& orientation) {
  const PlaneGraph g = import_plane_graph_json(read_file(graph_file));
  KnotDiagram d;
  if (!orientation.empty()) {
    if (static_cast<int>(orientation.size()) != g.vertex_count()) {
      throw std::invalid_argument("--orientation needs one of a/c per vertex");
    }
    OrientedPlaneGraph og{g, {}};
    for (char ch : orientation) {
      if (ch != 'a' && ch != 'c') throw std::invalid_argument("--orientation letters must be a or c");
      og.orientation.push_back(ch == 'a' ? VertexOrientation::anticlockwise : VertexOrientation::clockwise);
    }
    d = graph_to_link(og);
  } else {
    const auto path = find_bieulerian(g.graph());
    if (!path) throw std::invalid_argument("graph has no bieulerian path; pass --orientation");
    d = trivalent_to_flat_knot(g, *path);
  }
  std::cout << "gauss=" << serialize_gauss(d.code()) << "\n";
  std::cout << "n=" << d.crossing_count() << "\n";
  std::cout << "g=" << canonical_genus(d) << "\n";
  std::cout << "flat=" << (is_flat(d) ? "yes" : "no") << "\n";
  return 0;
}

int cmd_census(int vmax, int nmax, int c, bool c_given, const std::string& out_file, bool strict) {
  const auto records = enumerate_flat_knots(vmax);
  bool ok = true;
  for (const auto& r : records) ok = ok && r.one_component && r.flat && r.alternating && r.seifert_tait;
  if (out_file.empty()) {
    write_census_csv(std::cout, records, nmax, strict);
  } else {
    std::ofstream out(out_file);
    if (!out) throw std::runtime_error("cannot write " + out_file);
    write_census_csv(out, records, nmax, strict);
    for (const auto& r : records) {
      std::cout << "generator=" << r.generator_id << " v=" << r.v << " e=" << r.e << " genus=" << r.genus
                << " crossings=" << r.crossings << " classes=" << r.classes
                << " three_connected=" << (r.three_connected ? "yes" : "no") << " gauss=" << r.gauss << "\n";
    }
  }
  if (c_given) {
    for (const auto& r : records) {
      if (r.genus <= 1) continue;
      std::cerr << "dominance generator=" << r.generator_id << " n=" << nmax << " bound="
                << dominance_lower_bound(nmax, r.genus, c) << "\n";
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knotforge: Seifert and Tait graphs, Wicks forms and flat knot census"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Human-readable tables instead of key=value lines");

  std::string code;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a signed Gauss code");
  analyze_cmd->add_option("code", code, "Signed Gauss code, e.g. \"O1+ U2+ O3+ U1+ O2+ U3+\"")->required();

  std::string suite;
  int max = 9;
  std::string fixtures;
  auto* verify_cmd = app.add_subcommand("verify", "Run a property suite over the fixture corpus");
  verify_cmd->add_option("suite", suite, "phi-dual, seifert-tait, surface-genus, seifert-graph, synthesis or all")
      ->required();
  verify_cmd->add_option("--max", max, "Largest crossing count (vertex count for synthesis)");
  verify_cmd->add_option("--fixtures", fixtures, "Fixture file (default: $KNOTFORGE_FIXTURES or the bundled corpus)");

  std::string word;
  auto* wicks_cmd = app.add_subcommand("wicks", "Cyclic word tools");
  wicks_cmd->require_subcommand(1);
  auto* wicks_check = wicks_cmd->add_subcommand("check", "Check a word against the Wicks conditions");
  wicks_check->add_option("word", word, "Word such as \"a b a^-1 b^-1\"")->required();

  std::string graph_file, orientation;
  auto* synth_cmd = app.add_subcommand("synth", "Synthesize a knot diagram from a plane graph");
  synth_cmd->add_option("--graph", graph_file, "Plane graph JSON")->required();
  synth_cmd->add_option("--orientation", orientation, "One letter per vertex: a (anticlockwise) or c (clockwise)");

  int vmax = 6, nmax = 12, c = 1;
  std::string out_file;
  bool strict = false;
  auto* census_cmd = app.add_subcommand("census", "Flat knot census from trivalent generators (CSV)");
  census_cmd->add_option("--vmax", vmax, "Largest generator vertex count (<= 10)");
  census_cmd->add_option("--nmax", nmax, "Largest crossing count in the series table");
  auto* c_opt = census_cmd->add_option("--c", c, "Number of deficient series for the dominance bound");
  census_cmd->add_option("--out", out_file, "Write the CSV here instead of stdout");
  census_cmd->add_flag("--strict", strict, "Count series members that keep every generator chord");

  int n = 0, d = 1, n0 = 0;
  auto* count_cmd = app.add_subcommand("series-count", "Size of a generating series at n crossings");
  count_cmd->add_option("--n", n, "Crossings")->required();
  count_cmd->add_option("--d", d, "Number of classes")->required();
  count_cmd->add_option("--n0", n0, "Generator size (with --strict)");
  bool strict_count = false;
  count_cmd->add_flag("--strict", strict_count, "binom(n - n0 + d - 1, d - 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(code, pretty);
    if (*verify_cmd) return cmd_verify(suite, max, fixtures);
    if (*wicks_check) return cmd_wicks_check(word, pretty);
    if (*synth_cmd) return cmd_synth(graph_file, orientation);
    if (*census_cmd) return cmd_census(vmax, nmax, c, c_opt->count() > 0, out_file, strict);
    if (*count_cmd) {
      std::cout << (strict_count ? strict_series_count(n, n0, d) : series_count(n, d)) << "\n";
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
