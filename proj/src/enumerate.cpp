#include "knotforge/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace knotforge {

namespace {

// Builds labeled cubic multigraphs where vertices are discovered in order:
// the lowest vertex with missing degree is always completed next, and a vertex
// never touched before may only be the next fresh one. This keeps the graph
// connected and cuts most relabelings before the isomorphism pass.
void generate(int n, std::vector<int>& deficit, std::vector<Edge>& edges, int fresh, int last_target,
              int current, std::vector<MultiGraph>& out) {
  int u = 0;
  while (u < n && deficit[u] == 0) ++u;
  if (u == n) {
    out.emplace_back(n, edges);
    return;
  }
  if (u >= fresh) return;  // u was never reached: disconnected
  if (u != current) last_target = -1;
  for (int w = std::max(u, last_target); w < n && w <= fresh; ++w) {
    if (w == u) {
      if (deficit[u] < 2) continue;
      deficit[u] -= 2;
    } else {
      if (deficit[w] == 0) continue;
      --deficit[u];
      --deficit[w];
    }
    edges.push_back({u, w});
    generate(n, deficit, edges, std::max(fresh, w + 1), w, u, out);
    edges.pop_back();
    if (w == u) {
      deficit[u] += 2;
    } else {
      ++deficit[u];
      ++deficit[w];
    }
  }
}

std::vector<int> invariant(const MultiGraph& g) {
  // Sorted (loops, sorted neighbour-multiplicity profile) per vertex.
  const auto m = g.multiplicities();
  std::vector<std::vector<int>> rows;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> row;
    for (int w = 0; w < g.vertex_count(); ++w) {
      if (w != v && m[v][w]) row.push_back(m[v][w]);
    }
    std::sort(row.begin(), row.end());
    row.insert(row.begin(), m[v][v]);
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  std::vector<int> flat;
  for (const auto& r : rows) {
    flat.push_back(static_cast<int>(r.size()));
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return flat;
}

}  // namespace

std::optional<PlaneGraph> find_plane_embedding(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> base(n);
  for (int e = 0; e < g.edge_count(); ++e) {
    base[g.edge(e).u].push_back(end_a(e));
    base[g.edge(e).v].push_back(end_b(e));
  }
  // Each vertex contributes (deg-1)! cyclic orders; enumerate them all.
  std::vector<std::vector<std::vector<int>>> choices(n);
  for (int v = 0; v < n; ++v) {
    auto rest = std::vector<int>(base[v].begin() + (base[v].empty() ? 0 : 1), base[v].end());
    std::sort(rest.begin(), rest.end());
    do {
      std::vector<int> r;
      if (!base[v].empty()) r.push_back(base[v][0]);
      r.insert(r.end(), rest.begin(), rest.end());
      choices[v].push_back(std::move(r));
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  std::vector<int> comp;
  const int c = g.components(comp);
  const int target_faces = g.edge_count() - n + 1 + c;
  std::vector<std::vector<int>> rot(n);
  std::optional<PlaneGraph> found;
  std::function<void(int)> pick = [&](int v) {
    if (found) return;
    if (v == n) {
      PlaneGraph p(g, rot);
      if (p.trace_faces().count() == target_faces) found = std::move(p);
      return;
    }
    for (const auto& r : choices[v]) {
      rot[v] = r;
      pick(v + 1);
      if (found) return;
    }
  };
  pick(0);
  return found;
}

std::vector<PlaneGraph> enumerate_trivalent_planar(int v_max) {
  if (v_max > 10) throw std::invalid_argument("enumerate_trivalent_planar: v_max must be at most 10");
  std::vector<PlaneGraph> out;
  for (int n = 2; n <= v_max; n += 2) {
    std::vector<MultiGraph> labeled;
    std::vector<int> deficit(n, 3);
    std::vector<Edge> edges;
    generate(n, deficit, edges, 1, -1, -1, labeled);
    std::map<std::vector<int>, std::vector<MultiGraph>> classes;
    std::vector<MultiGraph> reps;
    for (auto& g : labeled) {
      auto& bucket = classes[invariant(g)];
      bool seen = false;
      for (const auto& h : bucket) {
        if (are_isomorphic(g, h)) {
          seen = true;
          break;
        }
      }
      if (seen) continue;
      bucket.push_back(g);
      reps.push_back(g);
    }
    for (const auto& g : reps) {
      if (auto p = find_plane_embedding(g)) out.push_back(std::move(*p));
    }
  }
  return out;
}

}  // namespace knotforge
