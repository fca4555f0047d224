#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "centracover/subgroup_set.hpp"

namespace centracover {

/// One deduplicated noncentral-element centralizer together with its
/// center Z(g) = Z(C_G(g)), its Z* class (all noncentral elements sharing
/// this centralizer) and its position in the containment order.
struct AtlasEntry {
  int id = -1;
  int representative = -1;  // least element index in zstar
  SubgroupSet centralizer;
  SubgroupSet center;
  ElementMask zstar;
  bool centralizer_maximal = false;
  bool centralizer_minimal = false;
  bool centralizer_abelian = false;
};

/// The families C(G) and Z(G) for a nonabelian group: all distinct
/// centralizers of noncentral elements, the order-reversing correspondence
/// between centralizers and centers, the Z* classes partitioning
/// G \ Z(G), and the containment Hasse order. Immutable after build; owns
/// its copy of the group.
class CentralizerAtlas {
 public:
  /// Throws AbelianGroup when the group has no noncentral elements.
  static CentralizerAtlas build(Group g);

  const Group& group() const { return *group_; }
  int size() const { return static_cast<int>(entries_.size()); }
  const AtlasEntry& entry(int id) const;
  const std::vector<AtlasEntry>& entries() const { return entries_; }

  /// Entry id of a noncentral element; throws CentralElement otherwise.
  int entry_of(int element) const;

  const SubgroupSet& center_subgroup() const { return center_; }
  const ElementMask& noncentral_mask() const { return noncentral_; }

  bool centralizer_contains(int i, int j) const;    // C_i <= C_j
  bool center_contains(int i, int j) const;         // Z_i <= Z_j
  bool center_in_centralizer(int i, int j) const;   // Z_i <= C_j

  /// Covering pairs (sub, super) of strict containment among centralizers.
  const std::vector<std::pair<int, int>>& hasse_edges() const { return hasse_; }

  const std::vector<int>& maximal_centralizer_ids() const { return maximal_ids_; }
  const std::vector<int>& minimal_centralizer_ids() const { return minimal_ids_; }

  /// phi: entry id -> its center, the order-reversing bijection.
  const SubgroupSet& phi(int id) const { return entry(id).center; }
  /// Inverse of phi; the argument must be a stored center (NotACenter).
  int phi_inverse(const SubgroupSet& center_subgroup) const;

  /// The Z* class of a noncentral element; throws CentralElement.
  ElementMask zstar_class(int element) const;

 private:
  CentralizerAtlas(std::shared_ptr<const Group> g, SubgroupSet center,
                   ElementMask noncentral)
      : group_(std::move(g)),
        center_(std::move(center)),
        noncentral_(std::move(noncentral)) {}
  bool mat(const std::vector<char>& m, int i, int j) const {
    return m[static_cast<std::size_t>(i) * entries_.size() + j] != 0;
  }

  std::shared_ptr<const Group> group_;
  std::vector<AtlasEntry> entries_;
  std::vector<int> elem_to_entry_;  // -1 for central elements
  SubgroupSet center_;
  ElementMask noncentral_;
  std::vector<char> c_le_;     // c_le[i][j]: C_i subset of C_j
  std::vector<char> z_le_;     // z_le[i][j]: Z_i subset of Z_j
  std::vector<char> z_in_c_;   // z_in_c[i][j]: Z_i subset of C_j
  std::vector<std::pair<int, int>> hasse_;
  std::vector<int> maximal_ids_;
  std::vector<int> minimal_ids_;
};

/// Ids whose center is maximal in Z(G). Computed through the antitone law
/// (centers of minimal centralizers) and cross-checked against direct
/// subset comparison of the stored centers.
std::vector<int> maximal_center_ids(const CentralizerAtlas& atlas);
/// Ids whose center is minimal in Z(G); centers of maximal centralizers.
std::vector<int> minimal_center_ids(const CentralizerAtlas& atlas);

/// Z(g) \ Z(G) decomposes as the disjoint union of Z*(g) with the Z*
/// classes of the centralizers strictly containing C_G(g), and the latter
/// union is proper. `union_check` reports whether that held.
struct Star2Decomposition {
  std::vector<int> proper_superset_ids;
  bool union_check = false;
};
Star2Decomposition star2_decomposition(const CentralizerAtlas& atlas, int id);

/// Z(g_i) and Z(g_j) intersect either in Z(G) alone or in the subgroup
/// generated by the centers Z(c) of the noncentral elements c of the
/// intersection. `matches_intersection` reports whether the generated
/// subgroup reproduced the intersection exactly.
enum class IntersectionKind { CentralOnly, GeneratedByCenters };
struct IntersectionDecomposition {
  IntersectionKind kind;
  SubgroupSet subgroup;
  bool matches_intersection = true;
};
IntersectionDecomposition intersection_decomposition(const CentralizerAtlas& atlas,
                                                     int i, int j);

/// True when the centralizer equals the union of the centers Z(b) over
/// its noncentral members b.
bool union_of_centers(const CentralizerAtlas& atlas, int id);

}  // namespace centracover
