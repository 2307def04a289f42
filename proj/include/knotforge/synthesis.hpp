#pragma once

#include <stdexcept>
#include <vector>

#include "knotforge/diagram.hpp"
#include "knotforge/graph.hpp"

namespace knotforge {

enum class VertexOrientation { clockwise, anticlockwise };

struct OrientedPlaneGraph {
  PlaneGraph graph;
  std::vector<VertexOrientation> orientation;
};

class MultiComponent : public std::runtime_error {
 public:
  MultiComponent(const std::string& what, int components) : std::runtime_error(what), components_(components) {}
  int components() const { return components_; }

 private:
  int components_;
};

// Puts a degree-two vertex of the opposite orientation on every edge whose
// ends share an orientation. Edge e keeps its end a; the new edge carries
// the old end b. Unchanged if the orientation is already proper.
OrientedPlaneGraph subdivide(const OrientedPlaneGraph& g);

// Inverse of Seifert's algorithm: subdivide, orient every edge from its
// anticlockwise to its clockwise end, take the medial graph and turn each
// medial vertex into a crossing. The strand running from the anticlockwise
// side to the clockwise side passes over. Throws MultiComponent when the
// result is a link of two or more components.
KnotDiagram graph_to_link(const OrientedPlaneGraph& g);

// Orientation per vertex from the turn the path makes at its first arrival:
// leaving by the next end counter-clockwise means anticlockwise.
std::vector<VertexOrientation> path_orientations(const PlaneGraph& g, const std::vector<int>& path);

// Requires g trivalent and connected and path bieulerian on g.
KnotDiagram trivalent_to_flat_knot(const PlaneGraph& g, const std::vector<int>& path);

}  // namespace knotforge
