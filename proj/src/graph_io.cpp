#include "knotforge/graph_io.hpp"

#include <sstream>

#include "json.hpp"

namespace knotforge {

using nlohmann::json;

namespace {

std::string end_name(int end) { return std::to_string(edge_of(end)) + (end & 1 ? "b" : "a"); }

int parse_end_name(const std::string& s, int edge_count) {
  if (s.size() < 2 || (s.back() != 'a' && s.back() != 'b')) {
    throw std::invalid_argument("bad edge-end id '" + s + "'");
  }
  int e = 0;
  try {
    std::size_t used = 0;
    e = std::stoi(s.substr(0, s.size() - 1), &used);
    if (used != s.size() - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad edge-end id '" + s + "'");
  }
  if (e < 0 || e >= edge_count) throw std::invalid_argument("edge-end '" + s + "' names an unknown edge");
  return s.back() == 'a' ? end_a(e) : end_b(e);
}

json graph_json(const MultiGraph& g) {
  json out;
  out["vertices"] = json::array();
  for (int v = 0; v < g.vertex_count(); ++v) out["vertices"].push_back(v);
  out["edges"] = json::array();
  for (int id = 0; id < g.edge_count(); ++id) {
    out["edges"].push_back({{"id", id}, {"u", g.edge(id).u}, {"v", g.edge(id).v}});
  }
  return out;
}

std::string dot(const MultiGraph& g) {
  std::ostringstream os;
  os << "graph {\n";
  for (int v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
  for (int id = 0; id < g.edge_count(); ++id) {
    os << "  " << g.edge(id).u << " -- " << g.edge(id).v << " [label=\"e" << id << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace

std::string export_graph(const MultiGraph& g, GraphFormat format) {
  if (format == GraphFormat::dot) return dot(g);
  return graph_json(g).dump();
}

std::string export_graph(const PlaneGraph& g, GraphFormat format) {
  if (format == GraphFormat::dot) return dot(g.graph());
  json out = graph_json(g.graph());
  json rot = json::object();
  for (int v = 0; v < g.vertex_count(); ++v) {
    json ends = json::array();
    for (int h : g.rotation()[v]) ends.push_back(end_name(h));
    rot[std::to_string(v)] = ends;
  }
  out["rotations"] = rot;
  return out.dump();
}

std::variant<MultiGraph, PlaneGraph> import_graph_json(std::string_view text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("graph JSON: ") + e.what());
  }
  try {
    const auto& vs = in.at("vertices");
    const int n = static_cast<int>(vs.size());
    std::vector<bool> seen(n, false);
    for (const auto& v : vs) {
      const int id = v.get<int>();
      if (id < 0 || id >= n || seen[id]) throw std::invalid_argument("vertex ids must be 0..n-1 without repeats");
      seen[id] = true;
    }
    const auto& es = in.at("edges");
    const int m = static_cast<int>(es.size());
    std::vector<Edge> edges(m);
    std::vector<bool> have(m, false);
    for (const auto& e : es) {
      const int id = e.at("id").get<int>();
      if (id < 0 || id >= m || have[id]) throw std::invalid_argument("edge ids must be 0..m-1 without repeats");
      have[id] = true;
      edges[id] = {e.at("u").get<int>(), e.at("v").get<int>()};
    }
    MultiGraph g(n, std::move(edges));
    if (!in.contains("rotations")) return g;
    std::vector<std::vector<int>> rot(n);
    for (const auto& [key, ends] : in.at("rotations").items()) {
      const int v = std::stoi(key);
      if (v < 0 || v >= n) throw std::invalid_argument("rotation for unknown vertex " + key);
      for (const auto& s : ends) rot[v].push_back(parse_end_name(s.get<std::string>(), m));
    }
    return PlaneGraph(std::move(g), std::move(rot));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("graph JSON: ") + e.what());
  }
}

PlaneGraph import_plane_graph_json(std::string_view text) {
  auto g = import_graph_json(text);
  if (auto* p = std::get_if<PlaneGraph>(&g)) return std::move(*p);
  throw std::invalid_argument("graph JSON has no \"rotations\"; a plane graph is required");
}

}  // namespace knotforge
