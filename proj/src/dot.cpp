#include "centracover/dot.hpp"

#include <algorithm>
#include <sstream>

namespace centracover {

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string dot_centralizer_graph(const CentralizerAtlas& atlas,
                                  const CentralizerGraph& graph) {
  const std::vector<int> maximal = maximal_center_ids(atlas);
  std::vector<bool> is_max_center(atlas.size(), false);
  for (int id : maximal) is_max_center[id] = true;

  std::ostringstream out;
  out << "graph gz {\n";
  for (int i = 0; i < atlas.size(); ++i) {
    const AtlasEntry& e = atlas.entry(i);
    out << "  z" << i << " [label=\"Z("
        << dot_escape(atlas.group().label(e.representative))
        << ") |Z|=" << e.center.order() << "\"";
    if (is_max_center[i]) out << ", peripheries=2";
    out << "];\n";
  }
  for (auto [i, j] : graph.edges()) {
    out << "  z" << i << " -- z" << j << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string dot_hasse(const CentralizerAtlas& atlas) {
  struct Vertex {
    std::string id;
    std::string label;
    ElementMask mask;
    bool is_centralizer;
    bool is_center;
  };
  std::vector<Vertex> vertices;
  for (int i = 0; i < atlas.size(); ++i) {
    const AtlasEntry& e = atlas.entry(i);
    vertices.push_back(Vertex{
        "c" + std::to_string(i),
        "C(" + atlas.group().label(e.representative) +
            ") |C|=" + std::to_string(e.centralizer.order()),
        e.centralizer.members(), true, false});
  }
  // Centers that coincide with a centralizer are drawn once, on the
  // centralizer tier; the rest get their own vertex.
  for (int i = 0; i < atlas.size(); ++i) {
    const AtlasEntry& e = atlas.entry(i);
    bool merged = false;
    for (Vertex& v : vertices) {
      if (v.mask == e.center.members()) {
        v.is_center = true;
        merged = true;
        break;
      }
    }
    if (merged) continue;
    vertices.push_back(Vertex{
        "z" + std::to_string(i),
        "Z(" + atlas.group().label(e.representative) +
            ") |Z|=" + std::to_string(e.center.order()),
        e.center.members(), false, true});
  }

  const int m = static_cast<int>(vertices.size());
  auto subset = [&](int x, int y) {
    return vertices[x].mask.is_proper_subset_of(vertices[y].mask);
  };
  // Covering in the subgroup lattice of G: every element of y outside x
  // generates y together with x. Matches the drawn containment edges,
  // where e.g. a C2 center does not attach to a D8 that only contains it
  // through an intermediate subgroup outside the two families.
  auto lattice_covering = [&](int x, int y) {
    const std::vector<int> base = mask_elements(vertices[x].mask);
    const ElementMask extra = vertices[y].mask - vertices[x].mask;
    for (auto t = extra.find_first(); t != ElementMask::npos;
         t = extra.find_next(t)) {
      std::vector<int> gens = base;
      gens.push_back(static_cast<int>(t));
      if (generated_subgroup(atlas.group(), gens).members() != vertices[y].mask) {
        return false;
      }
    }
    return true;
  };
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < m; ++x) {
    if (!vertices[x].is_center) continue;
    for (int y = 0; y < m; ++y) {
      if (!vertices[y].is_centralizer || !subset(x, y)) continue;
      if (lattice_covering(x, y)) edges.emplace_back(x, y);
    }
  }
  std::sort(edges.begin(), edges.end());

  std::ostringstream out;
  out << "graph hasse {\n";
  for (const Vertex& v : vertices) {
    out << "  " << v.id << " [label=\"" << dot_escape(v.label) << "\"];\n";
  }
  out << "  { rank=same;";
  for (const Vertex& v : vertices) {
    if (v.is_centralizer) out << " " << v.id << ";";
  }
  out << " }\n";
  bool has_pure_center = false;
  for (const Vertex& v : vertices) {
    if (!v.is_centralizer) has_pure_center = true;
  }
  if (has_pure_center) {
    out << "  { rank=same;";
    for (const Vertex& v : vertices) {
      if (!v.is_centralizer) out << " " << v.id << ";";
    }
    out << " }\n";
  }
  for (auto [x, y] : edges) {
    out << "  " << vertices[y].id << " -- " << vertices[x].id << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace centracover
