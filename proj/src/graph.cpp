#include "knotforge/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <string>

namespace knotforge {

// ---------------------------------------------------------------- MultiGraph

MultiGraph::MultiGraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) throw std::invalid_argument("negative vertex count");
  for (const auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
  }
}

int MultiGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  edges_.push_back({u, v});
  return edge_count() - 1;
}

int MultiGraph::degree(int v) const {
  int d = 0;
  for (const auto& e : edges_) d += (e.u == v) + (e.v == v);
  return d;
}

std::vector<int> MultiGraph::degrees() const {
  std::vector<int> d(vertex_count_, 0);
  for (const auto& e : edges_) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

std::vector<std::vector<int>> MultiGraph::multiplicities() const {
  std::vector<std::vector<int>> m(vertex_count_, std::vector<int>(vertex_count_, 0));
  for (const auto& e : edges_) {
    ++m[e.u][e.v];
    if (e.u != e.v) ++m[e.v][e.u];
  }
  return m;
}

std::vector<std::vector<int>> MultiGraph::adjacency() const {
  std::vector<std::vector<int>> adj(vertex_count_);
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    if (e.u != e.v) adj[e.v].push_back(e.u);
  }
  return adj;
}

int MultiGraph::components(std::vector<int>& component_of) const {
  component_of.assign(vertex_count_, -1);
  const auto adj = adjacency();
  int count = 0;
  for (int s = 0; s < vertex_count_; ++s) {
    if (component_of[s] >= 0) continue;
    std::vector<int> stack{s};
    component_of[s] = count;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x]) {
        if (component_of[y] < 0) {
          component_of[y] = count;
          stack.push_back(y);
        }
      }
    }
    ++count;
  }
  return count;
}

bool MultiGraph::is_connected() const {
  std::vector<int> comp;
  return components(comp) <= 1;
}

MultiGraph MultiGraph::induced_by_edges(const std::vector<int>& edge_ids, std::vector<int>* vertex_map) const {
  std::vector<int> map(vertex_count_, -1);
  for (int id : edge_ids) {
    map[edges_[id].u] = 0;
    map[edges_[id].v] = 0;
  }
  int n = 0;
  for (auto& m : map) {
    if (m == 0) m = n++;
  }
  MultiGraph out(n);
  for (int id : edge_ids) out.add_edge(map[edges_[id].u], map[edges_[id].v]);
  if (vertex_map) *vertex_map = std::move(map);
  return out;
}

// ---------------------------------------------------------------- PlaneGraph

PlaneGraph::PlaneGraph(MultiGraph graph, std::vector<std::vector<int>> rotation)
    : graph_(std::move(graph)), rotation_(std::move(rotation)) {
  if (static_cast<int>(rotation_.size()) != graph_.vertex_count()) {
    throw std::invalid_argument("rotation system needs one list per vertex");
  }
  slot_.assign(2 * graph_.edge_count(), {-1, -1});
  for (int v = 0; v < graph_.vertex_count(); ++v) {
    for (int i = 0; i < static_cast<int>(rotation_[v].size()); ++i) {
      const int h = rotation_[v][i];
      if (h < 0 || h >= 2 * graph_.edge_count()) {
        throw std::invalid_argument("rotation lists unknown edge-end " + std::to_string(h));
      }
      if (slot_[h].first >= 0) {
        throw std::invalid_argument("edge-end " + std::to_string(h) + " listed twice");
      }
      const Edge& e = graph_.edge(edge_of(h));
      if ((h & 1 ? e.v : e.u) != v) {
        throw std::invalid_argument("edge-end " + std::to_string(h) + " listed at the wrong vertex");
      }
      slot_[h] = {v, i};
    }
  }
  for (int h = 0; h < 2 * graph_.edge_count(); ++h) {
    if (slot_[h].first < 0) throw std::invalid_argument("edge-end " + std::to_string(h) + " missing from rotation");
  }
}

int PlaneGraph::vertex_of(int end) const { return slot_[end].first; }

int PlaneGraph::rot_next(int end) const {
  const auto [v, i] = slot_[end];
  const auto& r = rotation_[v];
  return r[(i + 1) % r.size()];
}

int PlaneGraph::rot_prev(int end) const {
  const auto [v, i] = slot_[end];
  const auto& r = rotation_[v];
  return r[(i + r.size() - 1) % r.size()];
}

FaceSet PlaneGraph::trace_faces() const {
  FaceSet faces;
  const int darts = 2 * edge_count();
  faces.face_of_dart.assign(darts, -1);
  for (int start = 0; start < darts; ++start) {
    if (faces.face_of_dart[start] >= 0) continue;
    const int id = faces.count();
    std::vector<int> walk;
    for (int d = start; faces.face_of_dart[d] < 0; d = face_next(d)) {
      faces.face_of_dart[d] = id;
      walk.push_back(d);
    }
    faces.walks.push_back(std::move(walk));
  }
  return faces;
}

bool PlaneGraph::is_spherical() const {
  std::vector<int> comp;
  const int c = graph_.components(comp);
  std::vector<int> v(c, 0), e(c, 0), f(c, 0);
  for (int x = 0; x < vertex_count(); ++x) ++v[comp[x]];
  for (const auto& edge : graph_.edges()) ++e[comp[edge.u]];
  const FaceSet faces = trace_faces();
  for (const auto& walk : faces.walks) ++f[comp[vertex_of(walk.front())]];
  for (int i = 0; i < c; ++i) {
    // An isolated vertex bounds a single face of its own.
    const int faces_i = e[i] == 0 ? 1 : f[i];
    if (v[i] - e[i] + faces_i != 2) return false;
  }
  return true;
}

PlaneGraph PlaneGraph::mirror() const {
  auto rot = rotation_;
  for (auto& r : rot) std::reverse(r.begin(), r.end());
  return PlaneGraph(graph_, std::move(rot));
}

PlaneGraph PlaneGraph::restrict_to_edges(const std::vector<int>& edge_ids, std::vector<int>* vertex_map) const {
  std::vector<int> vmap;
  MultiGraph sub = graph_.induced_by_edges(edge_ids, &vmap);
  std::vector<int> new_id(graph_.edge_count(), -1);
  for (int i = 0; i < static_cast<int>(edge_ids.size()); ++i) new_id[edge_ids[i]] = i;
  std::vector<std::vector<int>> rot(sub.vertex_count());
  for (int v = 0; v < vertex_count(); ++v) {
    if (vmap[v] < 0) continue;
    for (int h : rotation_[v]) {
      const int e = new_id[edge_of(h)];
      if (e >= 0) rot[vmap[v]].push_back(2 * e + (h & 1));
    }
  }
  if (vertex_map) *vertex_map = std::move(vmap);
  return PlaneGraph(std::move(sub), std::move(rot));
}

FaceSet trace_faces(const PlaneGraph& g) { return g.trace_faces(); }

PlaneGraph dual(const PlaneGraph& g) {
  if (!g.graph().is_connected()) throw std::invalid_argument("dual: graph is not connected");
  const FaceSet faces = g.trace_faces();
  MultiGraph d(faces.count());
  for (int e = 0; e < g.edge_count(); ++e) {
    d.add_edge(faces.face_of_dart[end_a(e)], faces.face_of_dart[end_b(e)]);
  }
  // The walk runs counter-clockwise around its face, which is the rotation of
  // the dual vertex placed inside it.
  return PlaneGraph(std::move(d), faces.walks);
}

PlaneGraph medial(const PlaneGraph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("medial: graph has no edges");
  if (!g.graph().is_connected()) throw std::invalid_argument("medial: graph is not connected");
  // Medial edge c(h) is the corner between end h and rot_next(h); its end a sits
  // at medial vertex edge_of(h), its end b at edge_of(rot_next(h)).
  const int ends = 2 * g.edge_count();
  MultiGraph m(g.edge_count());
  for (int h = 0; h < ends; ++h) m.add_edge(edge_of(h), edge_of(g.rot_next(h)));
  std::vector<std::vector<int>> rot(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const int ha = end_a(e), hb = end_b(e);
    rot[e] = {end_b(g.rot_prev(hb)), end_a(ha), end_b(g.rot_prev(ha)), end_a(hb)};
  }
  return PlaneGraph(std::move(m), std::move(rot));
}

// ---------------------------------------------------------------- predicates

bool is_bipartite(const MultiGraph& g, std::vector<int>* side) {
  std::vector<int> color(g.vertex_count(), -1);
  const auto adj = g.adjacency();
  for (const auto& e : g.edges()) {
    if (e.u == e.v) return false;
  }
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int y : adj[x]) {
        if (color[y] < 0) {
          color[y] = 1 - color[x];
          q.push(y);
        } else if (color[y] == color[x]) {
          return false;
        }
      }
    }
  }
  if (side) *side = std::move(color);
  return true;
}

BlockDecomposition blocks_and_cut_vertices(const MultiGraph& g) {
  if (!g.is_connected()) throw std::invalid_argument("blocks: graph is not connected");
  BlockDecomposition out;
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> inc(n);  // (neighbour, edge id), loops skipped
  for (int id = 0; id < g.edge_count(); ++id) {
    const auto& e = g.edge(id);
    if (e.u == e.v) {
      out.blocks.push_back({id});
      continue;
    }
    inc[e.u].push_back({e.v, id});
    inc[e.v].push_back({e.u, id});
  }
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> edge_stack;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int x, int parent_edge) {
    disc[x] = low[x] = timer++;
    int children = 0;
    for (const auto& [y, id] : inc[x]) {
      if (id == parent_edge) continue;
      if (disc[y] < 0) {
        edge_stack.push_back(id);
        ++children;
        dfs(y, id);
        low[x] = std::min(low[x], low[y]);
        if (low[y] >= disc[x]) {
          if (parent_edge >= 0 || children > 1) out.cut_vertices.insert(x);
          std::vector<int> block;
          while (true) {
            const int top = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(top);
            if (top == id) break;
          }
          std::sort(block.begin(), block.end());
          out.blocks.push_back(std::move(block));
        }
      } else if (disc[y] < disc[x]) {
        edge_stack.push_back(id);
        low[x] = std::min(low[x], disc[y]);
      }
    }
  };
  if (n > 0) dfs(0, -1);
  // A vertex carrying a loop and other edges still separates nothing.
  return out;
}

namespace {

int max_flow(std::vector<std::vector<int>> cap, int s, int t) {
  const int n = static_cast<int>(cap.size());
  int flow = 0;
  while (true) {
    std::vector<int> parent(n, -1);
    parent[s] = s;
    std::queue<int> q;
    q.push(s);
    while (!q.empty() && parent[t] < 0) {
      const int x = q.front();
      q.pop();
      for (int y = 0; y < n; ++y) {
        if (parent[y] < 0 && cap[x][y] > 0) {
          parent[y] = x;
          q.push(y);
        }
      }
    }
    if (parent[t] < 0) return flow;
    int push = 1 << 30;
    for (int y = t; y != s; y = parent[y]) push = std::min(push, cap[parent[y]][y]);
    for (int y = t; y != s; y = parent[y]) {
      cap[parent[y]][y] -= push;
      cap[y][parent[y]] += push;
    }
    flow += push;
  }
}

bool connected_without(const MultiGraph& g, const std::vector<bool>& removed) {
  const auto adj = g.adjacency();
  int start = -1, alive = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  }
  if (alive <= 1) return true;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<int> stack{start};
  seen[start] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : adj[x]) {
      if (!removed[y] && !seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == alive;
}

}  // namespace

int edge_connectivity(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return 0;
  if (!g.is_connected()) return 0;
  auto cap = g.multiplicities();
  for (int v = 0; v < n; ++v) cap[v][v] = 0;
  int best = 1 << 30;
  for (int t = 1; t < n; ++t) best = std::min(best, max_flow(cap, 0, t));
  return best;
}

bool is_three_connected(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n < 2 || !g.is_connected()) return false;
  if (edge_connectivity(g) < 3) return false;
  if (n <= 3) return true;
  std::vector<bool> removed(n, false);
  for (int a = 0; a < n; ++a) {
    removed[a] = true;
    if (!connected_without(g, removed)) return false;
    for (int b = a + 1; b < n; ++b) {
      removed[b] = true;
      const bool ok = connected_without(g, removed);
      removed[b] = false;
      if (!ok) return false;
    }
    removed[a] = false;
  }
  return true;
}

// ---------------------------------------------------------------- isomorphism

std::optional<std::vector<int>> find_isomorphism(const MultiGraph& a, const MultiGraph& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
  const auto ma = a.multiplicities(), mb = b.multiplicities();
  const auto da = a.degrees(), db = b.degrees();
  auto signature = [n](const std::vector<int>& deg, const std::vector<std::vector<int>>& m) {
    std::vector<std::pair<int, int>> s(n);
    for (int v = 0; v < n; ++v) s[v] = {deg[v], m[v][v]};
    return s;
  };
  auto sa = signature(da, ma), sb = signature(db, mb);
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return std::nullopt;
  }
  // Search order: BFS from the rarest signature so each vertex is constrained
  // by an already-mapped neighbour where possible.
  std::vector<int> order;
  std::vector<bool> placed(n, false);
  const auto adj = a.adjacency();
  while (static_cast<int>(order.size()) < n) {
    int seed = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (seed < 0 || da[v] > da[seed]) seed = v;
    }
    std::queue<int> q;
    q.push(seed);
    placed[seed] = true;
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      order.push_back(x);
      for (int y : adj[x]) {
        if (!placed[y]) {
          placed[y] = true;
          q.push(y);
        }
      }
    }
  }
  std::vector<int> map(n, -1), used(n, 0);
  std::function<bool(int)> extend = [&](int k) -> bool {
    if (k == n) return true;
    const int x = order[k];
    for (int y = 0; y < n; ++y) {
      if (used[y] || sa[x] != sb[y]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        const int xp = order[j];
        ok = ma[x][xp] == mb[y][map[xp]];
      }
      if (!ok) continue;
      map[x] = y;
      used[y] = 1;
      if (extend(k + 1)) return true;
      used[y] = 0;
      map[x] = -1;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

bool are_isomorphic(const MultiGraph& a, const MultiGraph& b) { return find_isomorphism(a, b).has_value(); }

bool are_plane_isomorphic(const PlaneGraph& a, const PlaneGraph& b, bool allow_mirror) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (!a.graph().is_connected() || !b.graph().is_connected()) {
    throw std::invalid_argument("plane isomorphism is only defined here for connected graphs");
  }
  if (a.edge_count() == 0) return true;
  const int darts = 2 * a.edge_count();
  auto attempt = [&](int image_of_zero, bool mirrored) {
    std::vector<int> phi(darts, -1), inv(darts, -1);
    std::vector<int> stack{0};
    phi[0] = image_of_zero;
    inv[image_of_zero] = 0;
    while (!stack.empty()) {
      const int d = stack.back();
      stack.pop_back();
      const int img = phi[d];
      const std::pair<int, int> steps[] = {
          {twin(d), twin(img)},
          {a.rot_next(d), mirrored ? b.rot_prev(img) : b.rot_next(img)},
      };
      for (const auto& [x, y] : steps) {
        if (phi[x] < 0) {
          if (inv[y] >= 0) return false;
          phi[x] = y;
          inv[y] = x;
          stack.push_back(x);
        } else if (phi[x] != y) {
          return false;
        }
      }
    }
    return true;
  };
  for (int t = 0; t < darts; ++t) {
    if (attempt(t, false)) return true;
    if (allow_mirror && attempt(t, true)) return true;
  }
  return false;
}

// ---------------------------------------------------------------- named graphs

namespace graphs {

PlaneGraph loop() { return PlaneGraph(MultiGraph(1, {{0, 0}}), {{0, 1}}); }

PlaneGraph dipole(int k) {
  MultiGraph g(2);
  std::vector<std::vector<int>> rot(2);
  for (int i = 0; i < k; ++i) {
    g.add_edge(0, 1);
    rot[0].push_back(end_a(i));
  }
  for (int i = k - 1; i >= 0; --i) rot[1].push_back(end_b(i));
  return PlaneGraph(std::move(g), std::move(rot));
}

PlaneGraph cycle(int k) {
  if (k == 1) return loop();
  MultiGraph g(k);
  std::vector<std::vector<int>> rot(k);
  for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
  for (int i = 0; i < k; ++i) rot[i] = {end_a(i), end_b((i + k - 1) % k)};
  return PlaneGraph(std::move(g), std::move(rot));
}

PlaneGraph theta() { return dipole(3); }

PlaneGraph k4() {
  MultiGraph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}});
  return PlaneGraph(std::move(g), {{0, 2, 4}, {6, 1, 11}, {8, 3, 7}, {10, 5, 9}});
}

PlaneGraph prism() {
  MultiGraph g(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  return PlaneGraph(std::move(g), {{12, 0, 5}, {2, 1, 14}, {4, 3, 16}, {6, 13, 11}, {8, 15, 7}, {10, 17, 9}});
}

PlaneGraph dumbbell() {
  MultiGraph g(2, {{0, 0}, {0, 1}, {1, 1}});
  return PlaneGraph(std::move(g), {{0, 1, 2}, {3, 4, 5}});
}

PlaneGraph single_edge() { return PlaneGraph(MultiGraph(2, {{0, 1}}), {{0}, {1}}); }

}  // namespace graphs

}  // namespace knotforge
