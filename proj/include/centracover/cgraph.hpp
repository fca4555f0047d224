#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "centracover/covers.hpp"

namespace centracover {

/// The centralizer graph: vertices are the atlas entries (the family
/// Z(G)), and distinct vertices i, j are adjacent exactly when
/// Z_i <= C_j, equivalently Z_j <= C_i, equivalently the representatives
/// commute. No self-loops.
class CentralizerGraph {
 public:
  /// Explicit construction from an edge list (validated symmetric and
  /// irreflexive); used by tests for synthetic graphs.
  CentralizerGraph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

  /// Builds the graph from the atlas; the three formulations of the edge
  /// rule are checked against each other for every pair.
  static CentralizerGraph build(const CentralizerAtlas& atlas);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  bool adjacent(int i, int j) const { return adjacency_[i].test(j); }
  const ElementMask& neighbors(int v) const { return adjacency_[v]; }
  /// Sorted unordered pairs (i, j) with i < j.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  explicit CentralizerGraph(int vertex_count);

  std::vector<ElementMask> adjacency_;
  std::vector<std::pair<int, int>> edges_;
};

struct DominatingVerdict {
  bool is_dominating = false;
  std::optional<int> undominated_vertex;
  std::optional<bool> is_minimal;
  std::optional<int> removable_vertex;
};

/// Every vertex is in S or adjacent to a vertex of S.
DominatingVerdict is_dominating(const CentralizerGraph& graph,
                                const std::vector<int>& s);

/// Domination plus minimality by single-vertex removal (domination is
/// monotone in S).
DominatingVerdict is_minimal_dominating(const CentralizerGraph& graph,
                                        const std::vector<int>& s);

/// For every nonempty subset of C(G) (exhaustive when the atlas has at
/// most subset_cap entries, a seeded sample otherwise): cover iff
/// dominating, and irredundant cover iff minimal dominating.
bool cover_domination_equivalence(const CentralizerAtlas& atlas,
                                  const CentralizerGraph& graph, int subset_cap,
                                  int sample_count = 1000,
                                  std::uint64_t seed = kDefaultSeed);

/// hypothesis: the minimal members of Z(G) are pairwise nonadjacent;
/// conclusion: the maximal centralizers form an irredundant cover.
struct NonadjacencyResult {
  bool hypothesis = false;
  bool conclusion = false;
};
NonadjacencyResult minimal_center_nonadjacency(const CentralizerAtlas& atlas,
                                               const CentralizerGraph& graph);

/// All minimal dominating sets, each verified, in sorted order. Exhaustive
/// mode needs at most 20 vertices; throws CapExceeded above that or when
/// more than count_cap sets exist.
std::vector<std::vector<int>> enumerate_minimal_dominating_sets(
    const CentralizerGraph& graph, int size_cap = 20, long count_cap = 100000);

}  // namespace centracover
