#include "knotforge/seifert.hpp"

#include <algorithm>
#include <stdexcept>

namespace knotforge {

SeifertDecomposition splice_all(const KnotDiagram& d) {
  const int m = d.arc_count();
  SeifertDecomposition dec;
  dec.circle_of_arc.assign(m, -1);
  for (int start = 0; start < m; ++start) {
    if (dec.circle_of_arc[start] >= 0) continue;
    std::vector<int> circle;
    // Arc k ends at position k+1; the splice continues along the arc leaving
    // the other passage of that crossing.
    for (int k = start; dec.circle_of_arc[k] < 0; k = d.partner((k + 1) % m)) {
      dec.circle_of_arc[k] = dec.circle_count();
      circle.push_back(k);
    }
    dec.circles.push_back(std::move(circle));
  }
  const int n = d.crossing_count();
  dec.crossing_links.resize(n);
  for (int c = 0; c < n; ++c) {
    dec.crossing_links[c] = {dec.circle_of_arc[edge_of(d.ports(c).over_out)],
                             dec.circle_of_arc[edge_of(d.ports(c).under_out)]};
  }
  return dec;
}

Side crossing_side(const KnotDiagram& d, const SeifertDecomposition& dec, int circle, int c) {
  const Ports& pt = d.ports(c);
  // The circle enters on one strand and leaves on the other.
  int in, out;
  if (dec.circle_of_arc[edge_of(pt.under_out)] == circle) {
    in = pt.over_in;
    out = pt.under_out;
  } else if (dec.circle_of_arc[edge_of(pt.over_out)] == circle) {
    in = pt.under_in;
    out = pt.over_out;
  } else {
    throw std::invalid_argument("crossing_side: circle does not pass the crossing");
  }
  return d.map().rot_next(in) == out ? Side::left : Side::right;
}

namespace {

std::vector<std::vector<int>> crossings_on(const SeifertDecomposition& dec) {
  std::vector<std::vector<int>> on(dec.circle_count());
  for (int c = 0; c < static_cast<int>(dec.crossing_links.size()); ++c) {
    on[dec.crossing_links[c].first].push_back(c);
    on[dec.crossing_links[c].second].push_back(c);
  }
  return on;
}

}  // namespace

SeifertDecomposition classify_circles(SeifertDecomposition dec, const KnotDiagram& d, int root_face) {
  const int s = dec.circle_count();
  const auto on = crossings_on(dec);
  dec.types.assign(s, CircleType::I);
  for (int g = 0; g < s; ++g) {
    for (int c : on[g]) {
      if (crossing_side(d, dec, g, c) != crossing_side(d, dec, g, on[g].front())) {
        dec.types[g] = CircleType::II;
        break;
      }
    }
  }
  // side_of[g'][g]: which side of circle g' contains circle g. Circles in one
  // component of the Seifert graph minus g' lie on the same side of g'.
  std::vector<std::vector<Side>> side_of(s, std::vector<Side>(s, Side::left));
  const int n = d.crossing_count();
  for (int gp = 0; gp < s; ++gp) {
    std::vector<int> comp(s, -1);
    for (int root = 0; root < s; ++root) {
      if (root == gp || comp[root] >= 0) continue;
      comp[root] = root;
      std::vector<int> stack{root};
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int c : on[x]) {
          const auto [a, b] = dec.crossing_links[c];
          const int y = a == x ? b : a;
          if (y != gp && comp[y] < 0) {
            comp[y] = root;
            stack.push_back(y);
          }
        }
      }
    }
    std::vector<int> seen(s, 0);
    for (int c = 0; c < n; ++c) {
      const auto [a, b] = dec.crossing_links[c];
      if (a != gp && b != gp) continue;
      const int other = a == gp ? b : a;
      const Side side = crossing_side(d, dec, gp, c);
      for (int g = 0; g < s; ++g) {
        if (g != gp && comp[g] == comp[other] && !seen[g]) {
          side_of[gp][g] = side;
          seen[g] = 1;
        }
      }
    }
  }
  // The root face touches the arc of its first dart; that arc's circle lies on
  // the same side of every other circle as the face does.
  const int dart = d.faces().walks.at(root_face).front();
  const int arc_circle = dec.circle_of_arc[edge_of(dart)];
  const Side near_side = dart & 1 ? Side::right : Side::left;
  dec.heights.assign(s, 0);
  for (int g = 0; g < s; ++g) {
    for (int gp = 0; gp < s; ++gp) {
      if (gp == g) continue;
      const Side face_side = gp == arc_circle ? near_side : side_of[gp][arc_circle];
      if (side_of[gp][g] != face_side) ++dec.heights[g];
    }
  }
  return dec;
}

bool is_flat(const KnotDiagram& d) {
  const auto dec = classify_circles(splice_all(d), d, 0);
  return std::all_of(dec.types.begin(), dec.types.end(), [](CircleType t) { return t == CircleType::I; });
}

MultiGraph seifert_graph(const KnotDiagram& d) {
  const auto dec = splice_all(d);
  MultiGraph g(dec.circle_count());
  for (const auto& [a, b] : dec.crossing_links) g.add_edge(a, b);
  return g;
}

std::optional<PlaneGraph> seifert_plane_graph(const KnotDiagram& d) {
  if (!is_flat(d)) return std::nullopt;
  const auto dec = splice_all(d);
  MultiGraph g(dec.circle_count());
  for (const auto& [a, b] : dec.crossing_links) g.add_edge(a, b);
  const int m = d.arc_count();
  std::vector<std::vector<int>> rot(dec.circle_count());
  for (int circle = 0; circle < dec.circle_count(); ++circle) {
    // Crossings in the order the circle meets them: each arc ends at one.
    for (int k : dec.circles[circle]) {
      const int c = d.crossing_at((k + 1) % m);
      rot[circle].push_back(dec.crossing_links[c].first == circle ? end_a(c) : end_b(c));
    }
    const int first = d.crossing_at((dec.circles[circle].front() + 1) % m);
    if (crossing_side(d, dec, circle, first) == Side::left) {
      std::reverse(rot[circle].begin(), rot[circle].end());
    }
  }
  return PlaneGraph(std::move(g), std::move(rot));
}

int canonical_genus(const KnotDiagram& d) {
  const int n = d.crossing_count();
  const int s = splice_all(d).circle_count();
  if ((n - s + 1) % 2 != 0) throw std::logic_error("canonical_genus: n - s + 1 is odd");
  return (n - s + 1) / 2;
}

}  // namespace knotforge
