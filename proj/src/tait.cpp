#include "knotforge/tait.hpp"

#include <numeric>
#include <queue>
#include <stdexcept>

namespace knotforge {

Coloring checkerboard(const KnotDiagram& d, int root_dart) {
  const FaceSet& faces = d.faces();
  const int f = faces.count();
  std::vector<int> color(f, -1);
  const int root = faces.face_of_dart.at(root_dart);
  color[root] = 0;
  std::queue<int> q;
  q.push(root);
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (int h : faces.walks[x]) {
      const int y = faces.face_of_dart[twin(h)];
      if (color[y] < 0) {
        color[y] = 1 - color[x];
        q.push(y);
      } else if (color[y] == color[x]) {
        throw std::logic_error("checkerboard: faces across an arc share a colour");
      }
    }
  }
  Coloring out(f);
  for (int i = 0; i < f; ++i) out[i] = color[i] == 0 ? Color::white : Color::black;
  return out;
}

namespace {

struct OneTait {
  PlaneGraph graph;
  std::vector<int> faces;
  std::vector<int> corner_of_end;
};

OneTait build_tait(const KnotDiagram& d, const Coloring& col, Color which) {
  const FaceSet& faces = d.faces();
  const int n = d.crossing_count();
  std::vector<int> vertex_of_face(faces.count(), -1);
  OneTait out;
  for (int f = 0; f < faces.count(); ++f) {
    if (col[f] == which) {
      vertex_of_face[f] = static_cast<int>(out.faces.size());
      out.faces.push_back(f);
    }
  }
  MultiGraph g(static_cast<int>(out.faces.size()));
  out.corner_of_end.assign(2 * n, -1);
  std::vector<int> low_corner(n, -1);
  for (int c = 0; c < n; ++c) {
    const int j = col[d.corner_face(c, 0)] == which ? 0 : 1;
    low_corner[c] = j;
    g.add_edge(vertex_of_face[d.corner_face(c, j)], vertex_of_face[d.corner_face(c, j + 2)]);
    out.corner_of_end[end_a(c)] = 4 * c + j;
    out.corner_of_end[end_b(c)] = 4 * c + j + 2;
  }
  std::vector<std::vector<int>> rot(out.faces.size());
  const PlaneGraph& map = d.map();
  for (std::size_t v = 0; v < out.faces.size(); ++v) {
    for (int h : faces.walks[out.faces[v]]) {
      // Passing from h to face_next(h) turns around the corner just before
      // the outgoing slot.
      const int next = map.face_next(h);
      const int c = map.vertex_of(next);
      int j = 0;
      while (d.slot(c, j) != next) ++j;
      rot[v].push_back(j == low_corner[c] ? end_a(c) : end_b(c));
    }
  }
  out.graph = PlaneGraph(std::move(g), std::move(rot));
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Unions arcs that meet at an unblocked corner inside a face.
UnionFind arc_regions(const PlaneGraph& map, const FaceSet& faces, const std::vector<char>& blocked) {
  UnionFind uf(map.edge_count());
  for (const auto& walk : faces.walks) {
    for (int h : walk) {
      const int next = map.face_next(h);
      const int c = map.vertex_of(next);
      int j = 0;
      while (map.rotation()[c][j] != next) ++j;
      if (!blocked[4 * c + j]) uf.unite(edge_of(h), edge_of(next));
    }
  }
  return uf;
}

}  // namespace

TaitPair tait_graphs(const KnotDiagram& d, const Coloring& col) {
  if (static_cast<int>(col.size()) != d.faces().count()) throw std::invalid_argument("colouring size mismatch");
  auto black = build_tait(d, col, Color::black);
  auto white = build_tait(d, col, Color::white);
  TaitPair p;
  p.T = std::move(black.graph);
  p.black_faces = std::move(black.faces);
  p.corner_of_end_T = std::move(black.corner_of_end);
  p.T_star = std::move(white.graph);
  p.white_faces = std::move(white.faces);
  p.corner_of_end_T_star = std::move(white.corner_of_end);
  return p;
}

TaitPair classify_cd_edges(const KnotDiagram& d, TaitPair pair) {
  const int n = d.crossing_count();
  std::vector<char> is_black(d.faces().count(), 0);
  for (int f : pair.black_faces) is_black[f] = 1;
  pair.classes.assign(n, EdgeClass::d);
  for (int c = 0; c < n; ++c) {
    if (is_black[d.corner_face(c, 2)]) pair.classes[c] = EdgeClass::c;
  }
  return pair;
}

PhiGraph build_phi(const KnotDiagram& d, const TaitPair& pair) {
  const int n = d.crossing_count();
  if (static_cast<int>(pair.classes.size()) != n) throw std::invalid_argument("build_phi: edges are not classified");
  PhiGraph phi;
  phi.diagram_map = d.map();
  phi.diagram_faces = d.faces();
  phi.crossing_count = n;
  for (int side = 0; side < 2; ++side) {
    const bool in_T = side == 0;
    const PlaneGraph& host = in_T ? pair.T : pair.T_star;
    const auto& corners = in_T ? pair.corner_of_end_T : pair.corner_of_end_T_star;
    std::vector<int> kept;
    for (int c = 0; c < n; ++c) {
      if ((pair.classes[c] == EdgeClass::c) == in_T) kept.push_back(c);
    }
    if (kept.empty()) continue;
    std::vector<int> vmap;
    const MultiGraph sub = host.graph().induced_by_edges(kept, &vmap);
    std::vector<int> comp;
    const int count = sub.components(comp);
    for (int k = 0; k < count; ++k) {
      std::vector<int> edges;
      for (int i = 0; i < static_cast<int>(kept.size()); ++i) {
        if (comp[sub.edge(i).u] == k) edges.push_back(kept[i]);
      }
      PhiComponent pc;
      pc.in_T = in_T;
      pc.graph = host.restrict_to_edges(edges);
      pc.crossing_of_edge = edges;
      for (int c : edges) {
        pc.corner_of_end.push_back(corners[end_a(c)]);
        pc.corner_of_end.push_back(corners[end_b(c)]);
      }
      pc.faces = pc.graph.trace_faces();
      phi.components.push_back(std::move(pc));
    }
  }
  // Nesting: with only component k drawn, each of its faces is a set of arcs;
  // another component lies in the face holding the arcs around its crossings.
  const int K = static_cast<int>(phi.components.size());
  phi.host_face.assign(K, std::vector<int>(K, -1));
  for (int k = 0; k < K; ++k) {
    const auto& pc = phi.components[k];
    std::vector<char> blocked(4 * n, 0);
    for (int corner : pc.corner_of_end) blocked[corner] = 1;
    UnionFind uf = arc_regions(phi.diagram_map, phi.diagram_faces, blocked);
    std::vector<int> face_of_region(phi.diagram_map.edge_count(), -1);
    for (int f = 0; f < pc.faces.count(); ++f) {
      // Left of a dart at its Tait corner is the arc leaving that corner's slot.
      const int corner = pc.corner_of_end[pc.faces.walks[f].front()];
      const int arc = edge_of(phi.diagram_map.rotation()[corner / 4][corner % 4]);
      face_of_region[uf.find(arc)] = f;
    }
    for (int l = 0; l < K; ++l) {
      if (l == k) continue;
      const int c = phi.components[l].crossing_of_edge.front();
      const int arc = edge_of(phi.diagram_map.rotation()[c][0]);
      phi.host_face[k][l] = face_of_region[uf.find(arc)];
      if (phi.host_face[k][l] < 0) throw std::logic_error("build_phi: component without a host face");
    }
  }
  return phi;
}

MultiGraph phi_dual(const PhiGraph& phi) {
  const int n = phi.crossing_count;
  std::vector<char> blocked(4 * n, 0);
  std::vector<int> phi_corner(n, -1);
  for (const auto& pc : phi.components) {
    for (int corner : pc.corner_of_end) {
      blocked[corner] = 1;
      const int c = corner / 4, j = corner % 4;
      if (phi_corner[c] < 0 || j < phi_corner[c]) phi_corner[c] = j;
    }
  }
  UnionFind uf = arc_regions(phi.diagram_map, phi.diagram_faces, blocked);
  std::vector<int> region(phi.diagram_map.edge_count(), -1);
  int count = 0;
  for (int a = 0; a < phi.diagram_map.edge_count(); ++a) {
    const int r = uf.find(a);
    if (region[r] < 0) region[r] = count++;
  }
  MultiGraph out(count);
  for (int c = 0; c < n; ++c) {
    if (phi_corner[c] < 0) throw std::invalid_argument("phi_dual: crossing without a Phi edge");
    // The Phi edge runs through corners j and j+2, separating slots j+1 and j+3.
    const auto& rot = phi.diagram_map.rotation()[c];
    const int j = phi_corner[c];
    out.add_edge(region[uf.find(edge_of(rot[j + 1]))], region[uf.find(edge_of(rot[(j + 3) % 4]))]);
  }
  return out;
}

}  // namespace knotforge
