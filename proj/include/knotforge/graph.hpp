#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace knotforge {

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected multigraph on vertices 0..n-1. Edge ids are indices into edges;
// loops and parallel edges are allowed.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int vertex_count, std::vector<Edge> edges = {});

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[id]; }

  int add_vertex() { return vertex_count_++; }
  int add_edge(int u, int v);

  // Number of edge-ends at v (a loop counts twice).
  int degree(int v) const;
  std::vector<int> degrees() const;
  // multiplicity[u][v]; loops are counted once on the diagonal.
  std::vector<std::vector<int>> multiplicities() const;
  // Vertex-neighbour lists with repetition for parallel edges; loops listed once.
  std::vector<std::vector<int>> adjacency() const;

  bool is_connected() const;
  // Component index per vertex; returns the component count.
  int components(std::vector<int>& component_of) const;
  MultiGraph induced_by_edges(const std::vector<int>& edge_ids, std::vector<int>* vertex_map = nullptr) const;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

// Edge-end ("half-edge") ids: end a of edge e is 2e (at edge(e).u), end b is 2e+1
// (at edge(e).v). As a dart, an edge-end means "leave its vertex along the edge".
inline int end_a(int e) { return 2 * e; }
inline int end_b(int e) { return 2 * e + 1; }
inline int edge_of(int end) { return end / 2; }
inline int twin(int end) { return end ^ 1; }

struct FaceSet {
  std::vector<std::vector<int>> walks;  // darts in traversal order; the face lies to the left
  std::vector<int> face_of_dart;
  int count() const { return static_cast<int>(walks.size()); }
};

// Multigraph plus a rotation system: for every vertex the counter-clockwise
// cyclic order of its edge-ends.
class PlaneGraph {
 public:
  PlaneGraph() = default;
  // Throws std::invalid_argument if the rotation does not list every edge-end
  // exactly once at its own vertex.
  PlaneGraph(MultiGraph graph, std::vector<std::vector<int>> rotation);

  const MultiGraph& graph() const { return graph_; }
  const std::vector<std::vector<int>>& rotation() const { return rotation_; }
  int vertex_count() const { return graph_.vertex_count(); }
  int edge_count() const { return graph_.edge_count(); }

  int vertex_of(int end) const;
  int rot_next(int end) const;  // counter-clockwise successor at the same vertex
  int rot_prev(int end) const;
  // Next dart along the face to the left of `dart`.
  int face_next(int dart) const { return rot_prev(twin(dart)); }

  FaceSet trace_faces() const;
  // True when every component satisfies V - E + F = 2.
  bool is_spherical() const;
  PlaneGraph mirror() const;
  PlaneGraph restrict_to_edges(const std::vector<int>& edge_ids, std::vector<int>* vertex_map = nullptr) const;

 private:
  MultiGraph graph_;
  std::vector<std::vector<int>> rotation_;
  std::vector<std::pair<int, int>> slot_;  // per end: (vertex, index in rotation)
};

FaceSet trace_faces(const PlaneGraph& g);

// Vertices of the dual are the faces of g (in trace order); dual edge e crosses
// edge e, with end a in the face left of dart 2e. Requires connected g.
PlaneGraph dual(const PlaneGraph& g);
// One vertex per edge of g, one edge per corner (consecutive edge-end pair).
PlaneGraph medial(const PlaneGraph& g);

bool is_bipartite(const MultiGraph& g, std::vector<int>* side = nullptr);

struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;  // edge ids per block
  std::set<int> cut_vertices;
  bool is_block() const { return blocks.size() == 1 && cut_vertices.empty(); }
};
BlockDecomposition blocks_and_cut_vertices(const MultiGraph& g);

int edge_connectivity(const MultiGraph& g);
// Edge-connectivity >= 3 and no separating vertex set of size <= 2; graphs on
// at most three vertices are judged by edge-connectivity alone.
bool is_three_connected(const MultiGraph& g);

// Vertex bijection a -> b preserving edge multiplicities (loops included).
std::optional<std::vector<int>> find_isomorphism(const MultiGraph& a, const MultiGraph& b);
bool are_isomorphic(const MultiGraph& a, const MultiGraph& b);
// Isomorphism of rotation systems, orientation-preserving unless allow_mirror.
bool are_plane_isomorphic(const PlaneGraph& a, const PlaneGraph& b, bool allow_mirror = false);

// Named small graphs used throughout the tests and the CLI.
namespace graphs {
PlaneGraph loop();            // one vertex, one loop
PlaneGraph dipole(int k);     // two vertices joined by k parallel edges
PlaneGraph cycle(int k);      // plane k-cycle
PlaneGraph theta();           // dipole(3)
PlaneGraph k4();
PlaneGraph prism();           // triangular prism
PlaneGraph dumbbell();        // two loops joined by a bridge
PlaneGraph single_edge();     // K2
}  // namespace graphs

}  // namespace knotforge
