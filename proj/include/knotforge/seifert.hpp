#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "knotforge/diagram.hpp"
#include "knotforge/graph.hpp"

namespace knotforge {

enum class CircleType { I, II };
enum class Side { left, right };

struct SeifertDecomposition {
  std::vector<std::vector<int>> circles;  // arcs in traversal order
  std::vector<int> circle_of_arc;
  // Per crossing: (circle through the arc leaving its over position,
  //                circle through the arc leaving its under position).
  std::vector<std::pair<int, int>> crossing_links;
  std::vector<int> heights;         // filled by classify_circles
  std::vector<CircleType> types;    // filled by classify_circles

  int circle_count() const { return static_cast<int>(circles.size()); }
};

SeifertDecomposition splice_all(const KnotDiagram& d);

// Side of crossing c relative to a circle passing through it (left = the side
// the circle's orientation puts on its left).
Side crossing_side(const KnotDiagram& d, const SeifertDecomposition& dec, int circle, int c);

// Fills types (sphere-level: type I iff all crossings on one side) and heights
// with root_face sent to infinity.
SeifertDecomposition classify_circles(SeifertDecomposition dec, const KnotDiagram& d, int root_face);

bool is_flat(const KnotDiagram& d);

// Vertices are circles, edge c is crossing c joining crossing_links[c].
MultiGraph seifert_graph(const KnotDiagram& d);
// The same graph with the rotation it inherits from the diagram; only defined
// for flat diagrams.
std::optional<PlaneGraph> seifert_plane_graph(const KnotDiagram& d);

int canonical_genus(const KnotDiagram& d);

}  // namespace knotforge
