#include "knotforge/wicks.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace knotforge {

int CyclicWord::chord_count() const {
  int m = -1;
  for (const auto& l : letters) m = std::max(m, l.id);
  return m + 1;
}

namespace {

std::string letter_text(const Letter& l) {
  return "a" + std::to_string(l.id + 1) + (l.exp < 0 ? "^-1" : "");
}

// Renames ids by first appearance starting at `start`; +1 letters sort first.
std::vector<int> key_from(const CyclicWord& w, int start) {
  const int n = w.size();
  std::map<int, int> rename;
  std::vector<int> key(n);
  for (int k = 0; k < n; ++k) {
    const Letter& l = w.letters[(start + k) % n];
    auto [it, fresh] = rename.emplace(l.id, static_cast<int>(rename.size()));
    key[k] = 2 * it->second + (l.exp < 0 ? 1 : 0);
  }
  return key;
}

CyclicWord from_key(const std::vector<int>& key) {
  CyclicWord w;
  for (int k : key) w.letters.push_back({k / 2, k % 2 ? -1 : 1});
  return w;
}

struct Positions {
  std::vector<int> plus, minus;
};

Positions positions(const CyclicWord& w) {
  Positions p;
  const int c = w.chord_count();
  p.plus.assign(c, -1);
  p.minus.assign(c, -1);
  for (int i = 0; i < w.size(); ++i) {
    auto& slot = w.letters[i].exp > 0 ? p.plus : p.minus;
    if (slot[w.letters[i].id] >= 0) throw std::invalid_argument("letter " + letter_text(w.letters[i]) + " repeated");
    slot[w.letters[i].id] = i;
  }
  for (int id = 0; id < c; ++id) {
    if ((p.plus[id] < 0) != (p.minus[id] < 0)) {
      throw std::invalid_argument("chord a" + std::to_string(id + 1) + " lacks one of its letters");
    }
  }
  return p;
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

// Parallel partners through the right slot (z y^-1 ... y z^-1) and the left
// slot (y^-1 z ... z^-1 y); -1 when free.
struct Slots {
  std::vector<int> right, left;
};

Slots slots(const CyclicWord& w, const Positions& p) {
  const int n = w.size();
  const int c = w.chord_count();
  Slots s{std::vector<int>(c, -1), std::vector<int>(c, -1)};
  auto at = [&](int i) { return w.letters[((i % n) + n) % n]; };
  for (int z = 0; z < c; ++z) {
    if (p.plus[z] < 0) continue;
    const Letter after_plus = at(p.plus[z] + 1), before_minus = at(p.minus[z] - 1);
    if (after_plus.id != z && after_plus.exp < 0 && before_minus.id == after_plus.id && before_minus.exp > 0) {
      s.right[z] = after_plus.id;
    }
    const Letter after_minus = at(p.minus[z] + 1), before_plus = at(p.plus[z] - 1);
    if (after_minus.id != z && after_minus.exp > 0 && before_plus.id == after_minus.id && before_plus.exp < 0) {
      s.left[z] = after_minus.id;
    }
  }
  return s;
}

CyclicWord drop_chords(const CyclicWord& w, const std::set<int>& gone) {
  CyclicWord out;
  for (const auto& l : w.letters) {
    if (!gone.count(l.id)) out.letters.push_back(l);
  }
  return out;
}

}  // namespace

CyclicWord parse_word(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  std::map<std::string, int> ids;
  CyclicWord w;
  int index = 0;
  for (; in >> tok; ++index) {
    std::size_t i = 0;
    while (i < tok.size() && std::isalpha(static_cast<unsigned char>(tok[i]))) ++i;
    if (i == 0) throw ParseError("word token " + std::to_string(index) + " '" + tok + "': expected a letter", index);
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
    const std::string name = tok.substr(0, i);
    const std::string suffix = tok.substr(i);
    int exp = 1;
    if (suffix == "^-1" || suffix == "⁻¹") {
      exp = -1;
    } else if (!suffix.empty() && suffix != "^1" && suffix != "^+1") {
      throw ParseError("word token " + std::to_string(index) + " '" + tok + "': bad exponent", index);
    }
    auto [it, fresh] = ids.emplace(name, static_cast<int>(ids.size()));
    w.letters.push_back({it->second, exp});
  }
  if (w.letters.empty()) throw ParseError("empty word", -1);
  return w;
}

std::string serialize_word(const CyclicWord& w) {
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += letter_text(l);
  }
  return out;
}

CyclicWord canonical(const CyclicWord& w) {
  if (w.letters.empty()) return w;
  std::vector<int> best = key_from(w, 0);
  for (int r = 1; r < w.size(); ++r) best = std::min(best, key_from(w, r));
  return from_key(best);
}

CyclicWord reverse_inverse(const CyclicWord& w) {
  CyclicWord out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back({it->id, -it->exp});
  return out;
}

CyclicWord dihedral_canonical(const CyclicWord& w) {
  if (w.letters.empty()) return w;
  const CyclicWord a = canonical(w), b = canonical(reverse_inverse(w));
  return key_from(a, 0) <= key_from(b, 0) ? a : b;
}

CyclicWord diagram_to_word(const KnotDiagram& d) {
  CyclicWord w;
  for (int p = 0; p < d.arc_count(); ++p) {
    w.letters.push_back({d.crossing_at(p), d.strand_at(p) == Strand::over ? 1 : -1});
  }
  return w;
}

WicksVerdict is_wicks(const CyclicWord& w) {
  WicksVerdict v;
  const int n = w.size();
  std::map<std::pair<int, int>, int> count;
  for (const auto& l : w.letters) ++count[{l.id, l.exp}];
  for (const auto& l : w.letters) {
    if (count[{l.id, l.exp}] != 1 || count[{l.id, -l.exp}] != 1) {
      return {false, 1, letter_text(l) + " is not matched by exactly one inverse"};
    }
  }
  std::set<std::pair<Letter, Letter>> factors;
  for (int i = 0; i < n; ++i) {
    const Letter x = w.letters[i], y = w.letters[(i + 1) % n];
    if (x.id == y.id && x.exp == -y.exp) return {false, 2, letter_text(x) + " " + letter_text(y)};
    factors.insert({x, y});
  }
  for (const auto& [x, y] : factors) {
    const Letter yi{y.id, -y.exp}, xi{x.id, -x.exp};
    if (factors.count({yi, xi})) {
      return {false, 3, letter_text(x) + " " + letter_text(y) + " and " + letter_text(yi) + " " + letter_text(xi)};
    }
  }
  return v;
}

WordSurface word_to_surface(const CyclicWord& w) {
  const WicksVerdict verdict = is_wicks(w);
  if (!verdict.ok && verdict.violated == 1) throw std::invalid_argument("word_to_surface: " + verdict.witness);
  const int n = w.size();
  const Positions p = positions(w);
  // Corner i starts side i. Side i is glued to its partner j reversed.
  UnionFind uf(n);
  for (int i = 0; i < n; ++i) {
    const Letter& l = w.letters[i];
    const int j = l.exp > 0 ? p.minus[l.id] : p.plus[l.id];
    uf.unite(i, (j + 1) % n);
    uf.unite((i + 1) % n, j);
  }
  std::map<int, int> vertex;
  for (int i = 0; i < n; ++i) vertex.emplace(uf.find(i), static_cast<int>(vertex.size()));
  WordSurface out;
  out.graph = MultiGraph(static_cast<int>(vertex.size()));
  for (int id = 0; id < w.chord_count(); ++id) {
    if (p.plus[id] < 0) continue;
    out.graph.add_edge(vertex[uf.find(p.plus[id])], vertex[uf.find((p.plus[id] + 1) % n)]);
  }
  auto& s = out.summary;
  s.v = out.graph.vertex_count();
  s.e = out.graph.edge_count();
  s.euler = s.v + 1 - s.e;
  s.orientable = true;
  if ((s.e - s.v + 1) % 2 != 0) throw std::domain_error("word_to_surface: e - v + 1 is odd");
  s.genus = (s.e - s.v + 1) / 2;
  return out;
}

namespace {

int tail(const MultiGraph& g, int dart) {
  const Edge& e = g.edge(edge_of(dart));
  return dart & 1 ? e.v : e.u;
}

}  // namespace

bool is_bieulerian(const MultiGraph& g, const std::vector<int>& path) {
  const int darts = 2 * g.edge_count();
  if (static_cast<int>(path.size()) != darts || darts == 0) return false;
  std::vector<char> used(darts, 0);
  for (int k = 0; k < darts; ++k) {
    const int h = path[k], nxt = path[(k + 1) % darts];
    if (h < 0 || h >= darts || used[h]) return false;
    used[h] = 1;
    if (tail(g, twin(h)) != tail(g, nxt) || nxt == twin(h)) return false;
  }
  return true;
}

std::optional<std::vector<int>> find_bieulerian(const MultiGraph& g) {
  const int e = g.edge_count(), v = g.vertex_count();
  if (e == 0 || !g.is_connected() || (e - v + 1) % 2 != 0) return std::nullopt;
  const int darts = 2 * e;
  std::vector<std::vector<int>> out_darts(v);
  for (int h = 0; h < darts; ++h) out_darts[tail(g, h)].push_back(h);
  std::vector<int> path{0};
  std::vector<char> used(darts, 0);
  used[0] = 1;
  std::function<bool()> extend = [&]() -> bool {
    const int last = path.back();
    if (static_cast<int>(path.size()) == darts) {
      return tail(g, twin(last)) == tail(g, path.front()) && path.front() != twin(last);
    }
    for (int h : out_darts[tail(g, twin(last))]) {
      if (used[h] || h == twin(last)) continue;
      used[h] = 1;
      path.push_back(h);
      if (extend()) return true;
      path.pop_back();
      used[h] = 0;
    }
    return false;
  };
  if (!extend()) return std::nullopt;
  return path;
}

CyclicWord path_word(const std::vector<int>& path) {
  CyclicWord w;
  for (int h : path) w.letters.push_back({edge_of(h), h & 1 ? -1 : 1});
  return w;
}

ChordPatterns chord_patterns(const CyclicWord& w) {
  ChordPatterns out;
  const int n = w.size();
  const Positions p = positions(w);
  const int c = w.chord_count();
  auto inside = [&](int from, int to, int x) {  // strictly between, going forward
    const int span = ((to - from) % n + n) % n;
    const int off = ((x - from) % n + n) % n;
    return off > 0 && off < span;
  };
  for (int x = 0; x < c; ++x) {
    if (p.plus[x] < 0) continue;
    bool crossed = false;
    for (int y = 0; y < c && !crossed; ++y) {
      if (y == x || p.plus[y] < 0) continue;
      crossed = inside(p.plus[x], p.minus[x], p.plus[y]) != inside(p.plus[x], p.minus[x], p.minus[y]);
    }
    if (!crossed) out.isolated.push_back(x);
  }
  const Slots s = slots(w, p);
  std::set<std::pair<int, int>> pairs;
  for (int z = 0; z < c; ++z) {
    for (int y : {s.right[z], s.left[z]}) {
      if (y >= 0) pairs.insert({std::min(y, z), std::max(y, z)});
    }
  }
  out.parallel_pairs.assign(pairs.begin(), pairs.end());
  for (int y = 0; y < c; ++y) {
    const int x = s.right[y], z = s.left[y];
    if (x >= 0 && z >= 0 && x != z) out.parallel_triples.push_back({std::min(x, z), y, std::max(x, z)});
  }
  return out;
}

CyclicWord t2_apply(const CyclicWord& w, int chord) {
  const Positions p = positions(w);
  if (chord < 0 || chord >= w.chord_count() || p.plus[chord] < 0) {
    throw std::invalid_argument("t2_apply: chord a" + std::to_string(chord + 1) + " is not in the word");
  }
  const Slots s = slots(w, p);
  // Walk the parallel chain to a free slot, alternating slots as we go.
  int z = chord;
  bool right = true;
  if (s.right[z] >= 0) {
    if (s.left[z] < 0) {
      right = false;
    } else {
      std::set<int> seen{z};
      z = s.right[z];
      right = false;  // arrived through z's right slot
      while (true) {
        if (!seen.insert(z).second) throw std::logic_error("t2_apply: parallel chain closes up");
        const int next = right ? s.right[z] : s.left[z];
        if (next < 0) break;
        z = next;
        right = !right;
      }
    }
  }
  const int d = w.chord_count();
  CyclicWord out;
  for (const auto& l : w.letters) {
    if (l.id == z && l.exp > 0) {
      if (!right) out.letters.push_back({d, -1});
      out.letters.push_back(l);
      if (right) out.letters.push_back({d, -1});
    } else if (l.id == z) {
      if (right) out.letters.push_back({d, 1});
      out.letters.push_back(l);
      if (!right) out.letters.push_back({d, 1});
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

namespace {

// Adjacent letters with the same exponent: zero for alternating words.
int alternation_defects(const CyclicWord& w) {
  int count = 0;
  for (int i = 0; i < w.size(); ++i) count += w.letters[i].exp == w.letters[(i + 1) % w.size()].exp;
  return count;
}

// Parallel chains of three or more chords, each listed from one end.
std::vector<std::vector<int>> long_chains(const CyclicWord& w) {
  const Slots s = slots(w, positions(w));
  const int c = w.chord_count();
  std::vector<bool> done(c, false);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < c; ++x) {
    if (done[x] || (s.right[x] >= 0 && s.left[x] >= 0)) continue;
    std::vector<int> chain{x};
    done[x] = true;
    int prev = -1, cur = x;
    while (true) {
      int next = s.right[cur] == prev ? s.left[cur] : s.right[cur];
      if (next < 0 || done[next]) break;
      chain.push_back(next);
      done[next] = true;
      prev = cur;
      cur = next;
    }
    if (chain.size() >= 3) out.push_back(std::move(chain));
  }
  return out;
}

}  // namespace

CyclicWord t2_reduce(const CyclicWord& w) {
  const CyclicWord start = canonical(w);
  const auto chains = long_chains(start);
  if (chains.empty()) return start;
  // Chains shrink two chords at a time, by dropping two neighbours or both
  // ends. Either way a chain ends up as one or two consecutive chords taken
  // from its first or its second position, so each chain has two outcomes.
  auto keep = [&](const std::vector<int>& chain, int offset, std::set<int>& gone) {
    const std::size_t left = chain.size() % 2 == 1 ? 1 : 2;
    for (std::size_t i = 0; i < chain.size(); ++i) {
      if (i < static_cast<std::size_t>(offset) || i >= offset + left) gone.insert(chain[i]);
    }
  };
  auto score = [](const CyclicWord& c) { return std::pair{alternation_defects(c), key_from(c, 0)}; };
  const std::size_t k = chains.size();
  auto build = [&](const std::vector<int>& choice) {
    std::set<int> gone;
    for (std::size_t i = 0; i < k; ++i) keep(chains[i], choice[i], gone);
    return canonical(drop_chords(start, gone));
  };
  // Prefer the most alternating result, then the smallest word. Exhaustive
  // over the outcomes when there are few chains, one chain at a time otherwise.
  std::vector<int> choice(k, 0);
  std::optional<CyclicWord> best;
  if (k <= 16) {
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      for (std::size_t i = 0; i < k; ++i) choice[i] = mask >> i & 1;
      CyclicWord cand = build(choice);
      if (!best || score(cand) < score(*best)) best = std::move(cand);
    }
  } else {
    best = build(choice);
    for (std::size_t i = 0; i < k; ++i) {
      choice[i] = 1;
      CyclicWord cand = build(choice);
      if (score(cand) < score(*best)) {
        best = std::move(cand);
      } else {
        choice[i] = 0;
      }
    }
  }
  return *best;
}

std::vector<std::vector<int>> equivalence_classes(const CyclicWord& w) {
  const int c = w.chord_count();
  const Positions p = positions(w);
  UnionFind uf(c);
  for (const auto& [a, b] : chord_patterns(w).parallel_pairs) uf.unite(a, b);
  std::map<int, std::vector<int>> groups;
  for (int x = 0; x < c; ++x) {
    if (p.plus[x] >= 0) groups[uf.find(x)].push_back(x);
  }
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace knotforge
