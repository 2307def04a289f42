#include "knotforge/census.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <stdexcept>

#include "knotforge/enumerate.hpp"
#include "knotforge/seifert.hpp"
#include "knotforge/synthesis.hpp"
#include "knotforge/tait.hpp"

namespace knotforge {

namespace {

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

std::optional<CensusRecord> census_one(int id, const PlaneGraph& g) {
  auto path = find_bieulerian(g.graph());
  if (!path) return std::nullopt;
  CensusRecord r;
  r.generator_id = id;
  r.generator = g;
  r.v = g.vertex_count();
  r.e = g.edge_count();
  r.three_connected = is_three_connected(g.graph());
  r.path = *path;
  const auto orient = path_orientations(g, *path);
  r.subdivisions = subdivide({g, orient}).graph.vertex_count() - g.vertex_count();
  try {
    const KnotDiagram d = trivalent_to_flat_knot(g, *path);
    r.one_component = true;
    r.crossings = d.crossing_count();
    r.genus = canonical_genus(d);
    r.flat = is_flat(d);
    r.alternating = is_alternating(d);
    r.seifert_tait = seifert_tait_check(d);
    r.word = canonical(diagram_to_word(d));
    r.classes = static_cast<int>(equivalence_classes(r.word).size());
    r.gauss = serialize_gauss(d.code());
  } catch (const std::logic_error&) {
    r.one_component = false;
  }
  return r;
}

}  // namespace

std::vector<CensusRecord> enumerate_flat_knots(int v_max) {
  const auto graphs = enumerate_trivalent_planar(v_max);
  std::vector<std::future<std::optional<CensusRecord>>> jobs;
  for (int id = 0; id < static_cast<int>(graphs.size()); ++id) {
    jobs.push_back(std::async(std::launch::async, census_one, id, std::cref(graphs[id])));
  }
  std::vector<CensusRecord> out;
  for (auto& j : jobs) {
    if (auto r = j.get()) out.push_back(std::move(*r));
  }
  return out;
}

BigInt series_count(int n, int d) {
  if (n < 0 || d < 1) throw std::invalid_argument("series_count: need n >= 0 and d >= 1");
  return binomial(n + d - 1, d - 1);
}

BigInt strict_series_count(int n, int n0, int d) {
  if (d < 1) throw std::invalid_argument("strict_series_count: need d >= 1");
  if (n < n0) return 0;
  return binomial(n - n0 + d - 1, d - 1);
}

Rational dominance_lower_bound(int n, int g, int c) {
  if (g <= 1) throw std::invalid_argument("dominance_lower_bound: genus must exceed 1");
  if (c < 1 || n < 1) throw std::invalid_argument("dominance_lower_bound: need c >= 1 and n >= 1");
  return Rational(n + 6 * g - 4, c * (6 * g - 4));
}

std::vector<CyclicWord> t2_expand_series(const CyclicWord& generator, int n) {
  const int n0 = generator.chord_count();
  if (n < n0) throw std::invalid_argument("t2_expand_series: n is below the generator size");
  auto key = [](const CyclicWord& w) { return serialize_word(w); };
  std::vector<CyclicWord> level{dihedral_canonical(generator)};
  for (int size = n0; size < n; ++size) {
    std::set<std::string> seen;
    std::vector<CyclicWord> next;
    for (const auto& w : level) {
      for (int chord = 0; chord < w.chord_count(); ++chord) {
        CyclicWord x = dihedral_canonical(t2_apply(w, chord));
        if (seen.insert(key(x)).second) next.push_back(std::move(x));
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end(), [&](const CyclicWord& a, const CyclicWord& b) { return key(a) < key(b); });
  return level;
}

bool seifert_tait_check(const KnotDiagram& d) {
  const MultiGraph s = seifert_graph(d);
  const TaitPair p = tait_graphs(d, checkerboard(d));
  return are_isomorphic(s, p.T.graph()) || are_isomorphic(s, p.T_star.graph());
}

void write_census_csv(std::ostream& out, const std::vector<CensusRecord>& records, int n_max, bool strict) {
  out << "generator_id,v,e,genus,three_connected,classes,n,count\n";
  for (const auto& r : records) {
    if (!r.one_component) continue;
    for (int n = r.crossings; n <= n_max; ++n) {
      const BigInt count = strict ? strict_series_count(n, r.crossings, r.classes) : series_count(n, r.classes);
      out << r.generator_id << ',' << r.v << ',' << r.e << ',' << r.genus << ','
          << (r.three_connected ? "true" : "false") << ',' << r.classes << ',' << n << ',' << count << '\n';
    }
  }
}

}  // namespace knotforge
