#include "knotforge/diagram.hpp"

namespace knotforge {

KnotDiagram from_gauss(const SignedGaussCode& input) {
  KnotDiagram d;
  d.code_ = input.canonical();
  const auto& entries = d.code_.entries();
  const int m = static_cast<int>(entries.size());
  const int n = m / 2;
  d.sign_.assign(n, Sign::plus);
  d.ports_.assign(n, {});
  d.crossing_at_.assign(m, -1);
  d.strand_at_.assign(m, Strand::over);
  d.partner_.assign(m, -1);
  std::vector<int> over_pos(n, -1), under_pos(n, -1);
  for (int p = 0; p < m; ++p) {
    const int c = entries[p].label - 1;
    d.crossing_at_[p] = c;
    d.strand_at_[p] = entries[p].strand;
    d.sign_[c] = entries[p].sign;
    (entries[p].strand == Strand::over ? over_pos : under_pos)[c] = p;
  }
  MultiGraph g(n);
  for (int k = 0; k < m; ++k) g.add_edge(d.crossing_at_[k], d.crossing_at_[(k + 1) % m]);
  std::vector<std::vector<int>> rot(n);
  for (int c = 0; c < n; ++c) {
    const int po = over_pos[c], pu = under_pos[c];
    d.partner_[po] = pu;
    d.partner_[pu] = po;
    Ports& pt = d.ports_[c];
    pt.over_out = end_a(po);
    pt.over_in = end_b((po + m - 1) % m);
    pt.under_out = end_a(pu);
    pt.under_in = end_b((pu + m - 1) % m);
    if (d.sign_[c] == Sign::plus) {
      rot[c] = {pt.under_in, pt.over_in, pt.under_out, pt.over_out};
    } else {
      rot[c] = {pt.over_in, pt.under_in, pt.over_out, pt.under_out};
    }
  }
  d.map_ = PlaneGraph(std::move(g), std::move(rot));
  d.faces_ = d.map_.trace_faces();
  if (d.faces_.count() != n + 2) {
    throw NonRealizable("Gauss code is not realizable on the sphere with these signs: " +
                        std::to_string(d.faces_.count()) + " faces, expected " + std::to_string(n + 2));
  }
  return d;
}

KnotDiagram from_gauss(std::string_view text) { return from_gauss(parse_gauss(text)); }

bool is_alternating(const KnotDiagram& d) {
  const int m = d.arc_count();
  for (int p = 0; p < m; ++p) {
    if (d.strand_at(p) == d.strand_at((p + 1) % m)) return false;
  }
  return true;
}

bool is_reduced(const KnotDiagram& d) {
  const int m = d.arc_count();
  for (int p = 0; p < m; ++p) {
    const int q = d.partner(p);
    if (q < p) continue;
    bool interleaved = false;
    for (int r = p + 1; r < q && !interleaved; ++r) {
      const int s = d.partner(r);
      interleaved = s < p || s > q;
    }
    if (!interleaved) return false;
  }
  return true;
}

}  // namespace knotforge
