#include "knotforge/synthesis.hpp"

#include <string>

#include "knotforge/wicks.hpp"

namespace knotforge {

OrientedPlaneGraph subdivide(const OrientedPlaneGraph& g) {
  const PlaneGraph& pg = g.graph;
  if (static_cast<int>(g.orientation.size()) != pg.vertex_count()) {
    throw std::invalid_argument("subdivide: one orientation per vertex required");
  }
  MultiGraph q(pg.vertex_count(), pg.graph().edges());
  auto rot = pg.rotation();
  auto orient = g.orientation;
  std::vector<Edge> edges = pg.graph().edges();
  const int m = pg.edge_count();
  for (int e = 0; e < m; ++e) {
    const int u = edges[e].u, v = edges[e].v;
    if (orient[u] != orient[v]) continue;
    const int w = static_cast<int>(orient.size());
    orient.push_back(orient[u] == VertexOrientation::clockwise ? VertexOrientation::anticlockwise
                                                               : VertexOrientation::clockwise);
    const int e2 = static_cast<int>(edges.size());
    edges[e].v = w;
    edges.push_back({w, v});
    // The old end b (at v) becomes end b of the new edge.
    for (int& h : rot[v]) {
      if (h == end_b(e)) h = end_b(e2);
    }
    rot.push_back({end_b(e), end_a(e2)});
  }
  MultiGraph out(static_cast<int>(orient.size()), edges);
  return {PlaneGraph(std::move(out), std::move(rot)), std::move(orient)};
}

KnotDiagram graph_to_link(const OrientedPlaneGraph& input) {
  if (input.graph.edge_count() == 0) throw std::invalid_argument("graph_to_link: graph has no edges");
  if (!input.graph.graph().is_connected()) throw std::invalid_argument("graph_to_link: graph is not connected");
  const OrientedPlaneGraph q = subdivide(input);
  const PlaneGraph& g = q.graph;
  const int m = g.edge_count();
  auto acw = [&](int end) { return q.orientation[g.vertex_of(end)] == VertexOrientation::anticlockwise; };
  // Corner edge c(h) runs between medial vertices edge_of(h) and
  // edge_of(rot_next(h)); its direction follows the orientation of the vertex
  // whose corner it is. Per medial vertex e: the over strand enters through
  // the anticlockwise corner c(rot_prev(h_acw)) and leaves through
  // c(rot_prev(h_cw)); the under strand enters through c(h_cw) and leaves
  // through c(h_acw).
  std::vector<int> acw_end(m), cw_end(m);
  for (int e = 0; e < m; ++e) {
    if (acw(end_a(e)) == acw(end_b(e))) throw std::logic_error("graph_to_link: improper orientation after subdivision");
    acw_end[e] = acw(end_a(e)) ? end_a(e) : end_b(e);
    cw_end[e] = twin(acw_end[e]);
  }
  // Walk the corner edges: a corner edge leaving medial vertex e enters the
  // neighbouring medial vertex, and the strand continues straight.
  const int corners = 2 * m;
  std::vector<char> done(corners, 0);
  std::vector<GaussEntry> entries;
  int components = 1;
  {
    int c = 0;
    while (!done[c]) {
      done[c] = 1;
      if (acw(c)) {
        // Runs from edge_of(c) into edge_of(rot_next(c)) as the over strand.
        const int target = edge_of(g.rot_next(c));
        if (acw_end[target] != g.rot_next(c)) throw std::logic_error("graph_to_link: corner orientation mismatch");
        entries.push_back({target + 1, Strand::over, Sign::minus});
        c = g.rot_prev(cw_end[target]);
      } else {
        // Runs from edge_of(rot_next(c)) into edge_of(c) as the under strand.
        const int target = edge_of(c);
        if (cw_end[target] != c) throw std::logic_error("graph_to_link: corner orientation mismatch");
        entries.push_back({target + 1, Strand::under, Sign::minus});
        c = acw_end[target];
      }
    }
  }
  for (int c = 0; c < corners; ++c) {
    if (done[c]) continue;
    ++components;
    int x = c;
    while (!done[x]) {
      done[x] = 1;
      if (acw(x)) {
        const int target = edge_of(g.rot_next(x));
        x = g.rot_prev(cw_end[target]);
      } else {
        x = acw_end[edge_of(x)];
      }
    }
  }
  if (components > 1) {
    throw MultiComponent("graph_to_link: the diagram has " + std::to_string(components) + " components",
                         components);
  }
  return from_gauss(SignedGaussCode(std::move(entries)));
}

std::vector<VertexOrientation> path_orientations(const PlaneGraph& g, const std::vector<int>& path) {
  std::vector<VertexOrientation> out(g.vertex_count(), VertexOrientation::anticlockwise);
  std::vector<char> seen(g.vertex_count(), 0);
  const int L = static_cast<int>(path.size());
  for (int k = 0; k < L; ++k) {
    const int arrive = twin(path[k]);
    const int leave = path[(k + 1) % L];
    const int v = g.vertex_of(arrive);
    if (seen[v]) continue;
    seen[v] = 1;
    out[v] = g.rot_next(arrive) == leave ? VertexOrientation::anticlockwise : VertexOrientation::clockwise;
  }
  return out;
}

KnotDiagram trivalent_to_flat_knot(const PlaneGraph& g, const std::vector<int>& path) {
  for (int d : g.graph().degrees()) {
    if (d != 3) throw std::invalid_argument("trivalent_to_flat_knot: graph is not trivalent");
  }
  if (!g.graph().is_connected()) throw std::invalid_argument("trivalent_to_flat_knot: graph is not connected");
  if (!is_bieulerian(g.graph(), path)) throw std::invalid_argument("trivalent_to_flat_knot: path is not bieulerian");
  try {
    return graph_to_link({g, path_orientations(g, path)});
  } catch (const MultiComponent& e) {
    throw std::logic_error(std::string("trivalent_to_flat_knot: ") + e.what());
  }
}

}  // namespace knotforge
