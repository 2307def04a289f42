#pragma once

#include <vector>

#include "knotforge/diagram.hpp"
#include "knotforge/graph.hpp"

namespace knotforge {

enum class Color { white, black };
enum class EdgeClass { c, d };

using Coloring = std::vector<Color>;  // per face of the diagram

// Proper two-colouring of the faces; the face left of root_dart is white.
Coloring checkerboard(const KnotDiagram& d, int root_dart = 0);

struct TaitPair {
  PlaneGraph T;       // black faces
  PlaneGraph T_star;  // white faces
  std::vector<int> black_faces;  // diagram face per vertex of T
  std::vector<int> white_faces;  // diagram face per vertex of T*
  // Edge c of both graphs is crossing c. For each end, the diagram corner
  // (crossing, corner index) it passes through.
  std::vector<int> corner_of_end_T;
  std::vector<int> corner_of_end_T_star;
  std::vector<EdgeClass> classes;  // per T-edge; T*-edge classes are the complement
};

// Corner (c, j) is packed as 4c + j.
TaitPair tait_graphs(const KnotDiagram& d, const Coloring& col);
// A T-edge is class c iff the corner between the two out-ports is black.
TaitPair classify_cd_edges(const KnotDiagram& d, TaitPair pair);

struct PhiComponent {
  PlaneGraph graph;
  bool in_T = true;                // a component of C (true) or of C' (false)
  std::vector<int> crossing_of_edge;
  std::vector<int> corner_of_end;  // packed corner per edge-end
  FaceSet faces;
};

struct PhiGraph {
  std::vector<PhiComponent> components;
  // host_face[k][l]: face of component k holding component l (-1 when k == l).
  std::vector<std::vector<int>> host_face;
  PlaneGraph diagram_map;
  FaceSet diagram_faces;
  int crossing_count = 0;
};

PhiGraph build_phi(const KnotDiagram& d, const TaitPair& pair);
// Regions of the sphere minus Phi, joined by one edge per Phi-edge.
MultiGraph phi_dual(const PhiGraph& phi);

}  // namespace knotforge
