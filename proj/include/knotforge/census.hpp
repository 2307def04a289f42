#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "knotforge/diagram.hpp"
#include "knotforge/graph.hpp"
#include "knotforge/wicks.hpp"

namespace knotforge {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct CensusRecord {
  int generator_id = 0;
  PlaneGraph generator;
  int v = 0;
  int e = 0;
  int genus = 0;
  bool three_connected = false;
  int classes = 0;
  int crossings = 0;     // of the synthesized diagram
  int subdivisions = 0;  // degree-two vertices added during synthesis
  bool flat = false;
  bool alternating = false;
  bool one_component = false;
  bool seifert_tait = false;
  std::string gauss;
  CyclicWord word;
  std::vector<int> path;
};

// One record per enumerated trivalent planar graph that has a bieulerian path.
std::vector<CensusRecord> enumerate_flat_knots(int v_max);

// binom(n + d - 1, d - 1): ways to spread n crossings over d classes.
BigInt series_count(int n, int d);
// Series members with exactly n crossings when every class keeps its
// generator chords: binom(n - n0 + d - 1, d - 1), zero below n0.
BigInt strict_series_count(int n, int n0, int d);
// (n + 6g - 4) / (c (6g - 4)); requires g > 1, c >= 1, n >= 1.
Rational dominance_lower_bound(int n, int g, int c);

// Every word with exactly n chords reachable from the generator by t2_apply,
// in dihedral canonical form, sorted.
std::vector<CyclicWord> t2_expand_series(const CyclicWord& generator, int n);

// Seifert graph isomorphic to one of the two Tait graphs.
bool seifert_tait_check(const KnotDiagram& d);

// Rows generator_id,v,e,genus,three_connected,classes,n,count for
// n = crossings..n_max.
void write_census_csv(std::ostream& out, const std::vector<CensusRecord>& records, int n_max, bool strict);

}  // namespace knotforge
