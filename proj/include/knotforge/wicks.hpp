#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "knotforge/diagram.hpp"
#include "knotforge/graph.hpp"

namespace knotforge {

struct Letter {
  int id = 0;    // chord id, >= 0
  int exp = 1;   // +1 or -1
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// A cyclic word, stored from an arbitrary starting point. Each chord id names
// one chord of the Gauss diagram: the +1 letter is the over-passage.
struct CyclicWord {
  std::vector<Letter> letters;

  int size() const { return static_cast<int>(letters.size()); }
  int chord_count() const;  // 1 + largest id, 0 when empty
  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
};

// Tokens: a letter name ([A-Za-z]+ optionally followed by digits) with an
// optional "^-1" or "^+1" suffix. Names are numbered by first appearance.
CyclicWord parse_word(std::string_view text);
// Tokens a<k> / a<k>^-1 with k = id + 1.
std::string serialize_word(const CyclicWord& w);

// Rotation minimising the word after renaming ids by first appearance.
CyclicWord canonical(const CyclicWord& w);
// Reverse the word and invert every letter.
CyclicWord reverse_inverse(const CyclicWord& w);
// Smaller of the canonical forms of w and reverse_inverse(w).
CyclicWord dihedral_canonical(const CyclicWord& w);

CyclicWord diagram_to_word(const KnotDiagram& d);

struct WicksVerdict {
  bool ok = true;
  int violated = 0;  // 1, 2 or 3 when !ok
  std::string witness;
};
WicksVerdict is_wicks(const CyclicWord& w);

struct SurfaceSummary {
  int v = 0;
  int e = 0;
  int euler = 0;
  int genus = 0;
  bool orientable = true;
};

struct WordSurface {
  MultiGraph graph;  // the graph on the surface: one edge per chord
  SurfaceSummary summary;
};
// Glues the sides of a 2e-gon labelled by w. Requires condition (i); throws
// std::domain_error when e - v + 1 is odd.
WordSurface word_to_surface(const CyclicWord& w);

// A bieulerian path as a sequence of darts (edge-end ids: leave the end's
// vertex along its edge). Starts with dart 0.
std::optional<std::vector<int>> find_bieulerian(const MultiGraph& g);
bool is_bieulerian(const MultiGraph& g, const std::vector<int>& path);
// Letter id = edge id; exponent +1 when the edge is traversed from its end a.
CyclicWord path_word(const std::vector<int>& path);

struct ChordPatterns {
  std::vector<int> isolated;
  std::vector<std::pair<int, int>> parallel_pairs;  // (smaller id, larger id)
  std::vector<std::array<int, 3>> parallel_triples; // chain x - y - z, x < z
};
ChordPatterns chord_patterns(const CyclicWord& w);

// Adds a chord parallel to `chord` at the end of its parallel chain.
CyclicWord t2_apply(const CyclicWord& w, int chord);
// Shortens every parallel chain of three or more chords by two at a time
// (two neighbours, or both ends) until no parallel triple is left. Of the
// possible end results it returns the most alternating, then the smallest.
// The result is in canonical form.
CyclicWord t2_reduce(const CyclicWord& w);

// Transitive closure of chord parallelism; classes sorted, each sorted.
std::vector<std::vector<int>> equivalence_classes(const CyclicWord& w);

}  // namespace knotforge
