#include "centracover/cgraph.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace centracover {

CentralizerGraph::CentralizerGraph(int vertex_count)
    : adjacency_(vertex_count, ElementMask(static_cast<std::size_t>(vertex_count))) {}

CentralizerGraph::CentralizerGraph(int vertex_count,
                                   const std::vector<std::pair<int, int>>& edges)
    : CentralizerGraph(vertex_count) {
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || i >= vertex_count || j >= vertex_count) {
      throw Error(Error::Code::BadIndex, "edge endpoint out of range");
    }
    if (i == j) {
      throw Error(Error::Code::BadIndex, "self-loops are not allowed");
    }
    adjacency_[i].set(j);
    adjacency_[j].set(i);
  }
  for (int i = 0; i < vertex_count; ++i) {
    for (auto j = adjacency_[i].find_first(); j != ElementMask::npos;
         j = adjacency_[i].find_next(j)) {
      if (static_cast<int>(j) > i) edges_.emplace_back(i, static_cast<int>(j));
    }
  }
  std::sort(edges_.begin(), edges_.end());
}

CentralizerGraph CentralizerGraph::build(const CentralizerAtlas& atlas) {
  const Group& g = atlas.group();
  const int k = atlas.size();
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const bool commute = g.commutes(atlas.entry(i).representative,
                                      atlas.entry(j).representative);
      const bool zi_in_cj = atlas.center_in_centralizer(i, j);
      const bool zj_in_ci = atlas.center_in_centralizer(j, i);
      if (commute != zi_in_cj || zi_in_cj != zj_in_ci) {
        throw std::logic_error(
            "edge rule mismatch between commutation and center containment");
      }
      if (commute) edges.emplace_back(i, j);
    }
  }
  return CentralizerGraph(k, edges);
}

namespace {

ElementMask dominated_mask(const CentralizerGraph& graph,
                           const std::vector<int>& s) {
  ElementMask dom(static_cast<std::size_t>(graph.vertex_count()));
  for (int v : s) {
    if (v < 0 || v >= graph.vertex_count()) {
      throw Error(Error::Code::BadIndex,
                  "vertex id " + std::to_string(v) + " out of range");
    }
    dom.set(v);
    dom |= graph.neighbors(v);
  }
  return dom;
}

}  // namespace

DominatingVerdict is_dominating(const CentralizerGraph& graph,
                                const std::vector<int>& s) {
  DominatingVerdict verdict;
  const ElementMask dom = dominated_mask(graph, s);
  verdict.is_dominating = dom.all();
  if (!verdict.is_dominating) {
    verdict.undominated_vertex = static_cast<int>((~dom).find_first());
  }
  return verdict;
}

DominatingVerdict is_minimal_dominating(const CentralizerGraph& graph,
                                        const std::vector<int>& s) {
  DominatingVerdict verdict = is_dominating(graph, s);
  if (!verdict.is_dominating) return verdict;
  verdict.is_minimal = true;
  for (std::size_t drop = 0; drop < s.size(); ++drop) {
    std::vector<int> rest;
    rest.reserve(s.size() - 1);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i != drop) rest.push_back(s[i]);
    }
    if (dominated_mask(graph, rest).all()) {
      verdict.is_minimal = false;
      verdict.removable_vertex = s[drop];
      break;
    }
  }
  return verdict;
}

bool cover_domination_equivalence(const CentralizerAtlas& atlas,
                                  const CentralizerGraph& graph, int subset_cap,
                                  int sample_count, std::uint64_t seed) {
  const int k = atlas.size();
  auto check = [&](const std::vector<int>& ids) {
    const bool cover = family_covers(atlas, ids, FamilySide::Centralizers);
    const bool dominating = is_dominating(graph, ids).is_dominating;
    if (cover != dominating) return false;
    if (cover) {
      const bool irredundant =
          family_irredundant(atlas, ids, FamilySide::Centralizers);
      const bool minimal = *is_minimal_dominating(graph, ids).is_minimal;
      if (irredundant != minimal) return false;
    }
    return true;
  };

  if (k <= subset_cap && k < 64) {
    std::vector<int> ids;
    for (std::uint64_t mask = 1; mask < (1ull << k); ++mask) {
      ids.clear();
      for (int i = 0; i < k; ++i) {
        if (mask & (1ull << i)) ids.push_back(i);
      }
      if (!check(ids)) return false;
    }
    return true;
  }
  std::mt19937_64 rng(seed);
  std::vector<int> ids;
  for (int s = 0; s < sample_count; ++s) {
    ids.clear();
    for (int i = 0; i < k; ++i) {
      if (rng() & 1) ids.push_back(i);
    }
    if (ids.empty()) continue;
    if (!check(ids)) return false;
  }
  return true;
}

NonadjacencyResult minimal_center_nonadjacency(const CentralizerAtlas& atlas,
                                               const CentralizerGraph& graph) {
  NonadjacencyResult out;
  const std::vector<int> minimal = minimal_center_ids(atlas);
  out.hypothesis = true;
  for (std::size_t a = 0; a < minimal.size() && out.hypothesis; ++a) {
    for (std::size_t b = a + 1; b < minimal.size(); ++b) {
      if (graph.adjacent(minimal[a], minimal[b])) {
        out.hypothesis = false;
        break;
      }
    }
  }
  const CoverVerdict verdict =
      is_irredundant_cover(atlas, maximal_centralizer_cover(atlas));
  out.conclusion = verdict.is_cover && *verdict.is_irredundant;
  return out;
}

namespace {

struct DominationSearch {
  const CentralizerGraph& graph;
  int size_cap;
  long count_cap;
  std::vector<std::vector<int>> found;
  std::vector<int> chosen;

  // Vertices are decided in ascending order. A branch dies once some
  // decided vertex can no longer be dominated by any undecided one.
  void dfs(int idx, const ElementMask& dominated) {
    const int k = graph.vertex_count();
    for (int v = 0; v < idx; ++v) {
      if (dominated.test(v)) continue;
      ElementMask candidates = graph.neighbors(v);
      candidates.set(v);
      bool rescuable = false;
      for (auto w = candidates.find_first(); w != ElementMask::npos;
           w = candidates.find_next(w)) {
        if (static_cast<int>(w) >= idx) {
          rescuable = true;
          break;
        }
      }
      if (!rescuable) return;
    }
    if (idx == k) {
      if (!dominated.all()) return;
      const DominatingVerdict verdict = is_minimal_dominating(graph, chosen);
      if (verdict.is_dominating && *verdict.is_minimal) {
        found.push_back(chosen);
        if (static_cast<long>(found.size()) > count_cap) {
          throw Error(Error::Code::CapExceeded,
                      "more than " + std::to_string(count_cap) +
                          " minimal dominating sets");
        }
      }
      return;
    }
    dfs(idx + 1, dominated);
    if (static_cast<int>(chosen.size()) < size_cap) {
      chosen.push_back(idx);
      ElementMask next = dominated;
      next.set(idx);
      next |= graph.neighbors(idx);
      dfs(idx + 1, next);
      chosen.pop_back();
    }
  }
};

}  // namespace

std::vector<std::vector<int>> enumerate_minimal_dominating_sets(
    const CentralizerGraph& graph, int size_cap, long count_cap) {
  if (graph.vertex_count() > 20) {
    throw Error(Error::Code::CapExceeded,
                "exhaustive enumeration supports at most 20 vertices, got " +
                    std::to_string(graph.vertex_count()));
  }
  DominationSearch search{graph, size_cap, count_cap, {}, {}};
  search.dfs(0, ElementMask(static_cast<std::size_t>(graph.vertex_count())));
  std::sort(search.found.begin(), search.found.end());
  return search.found;
}

}  // namespace centracover
