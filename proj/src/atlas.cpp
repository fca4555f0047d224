#include "centracover/atlas.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace centracover {

CentralizerAtlas CentralizerAtlas::build(Group group) {
  auto shared = std::make_shared<const Group>(std::move(group));
  const Group& g = *shared;
  SubgroupSet zg = center(g);
  if (zg.order() == g.order()) {
    throw Error(Error::Code::AbelianGroup,
                "group " + g.name() + " is abelian; C(G) is empty");
  }
  ElementMask noncentral = ~zg.members();

  CentralizerAtlas atlas(std::move(shared), std::move(zg), std::move(noncentral));
  const int n = g.order();
  atlas.elem_to_entry_.assign(n, -1);

  // Dedup pass: ascending element order makes the representative the least
  // member of its Z* class and the entry order deterministic.
  std::map<ElementMask, int> seen;
  std::vector<ElementMask> cent_masks;
  std::vector<ElementMask> zstars;
  std::vector<int> reps;
  for (int e = 0; e < n; ++e) {
    if (!atlas.noncentral_.test(e)) continue;
    ElementMask cm = centralizer_mask(g, e);
    auto [it, inserted] = seen.emplace(cm, static_cast<int>(reps.size()));
    if (inserted) {
      reps.push_back(e);
      cent_masks.push_back(std::move(cm));
      ElementMask zs(static_cast<std::size_t>(n));
      zs.set(e);
      zstars.push_back(std::move(zs));
    } else {
      zstars[it->second].set(e);
    }
    atlas.elem_to_entry_[e] = it->second;
  }

  const int k = static_cast<int>(reps.size());
  atlas.entries_.reserve(k);
  for (int i = 0; i < k; ++i) {
    SubgroupSet cent(g, cent_masks[i]);
    SubgroupSet zc = centralizer_of_set(g, cent_masks[i]);
    // C_G(C_G(g)) = Z(C_G(g)); the registry re-verifies this identity.
    if (!zc.members().is_subset_of(cent.members())) {
      throw std::logic_error("bicentralizer escaped the centralizer");
    }
    const bool abelian = is_abelian_subgroup(g, cent);
    atlas.entries_.push_back(AtlasEntry{
        i, reps[i], std::move(cent), std::move(zc), zstars[i], false, false,
        abelian});
  }

  // Containment matrices over the deduplicated families.
  atlas.c_le_.assign(static_cast<std::size_t>(k) * k, 0);
  atlas.z_le_.assign(static_cast<std::size_t>(k) * k, 0);
  atlas.z_in_c_.assign(static_cast<std::size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const std::size_t idx = static_cast<std::size_t>(i) * k + j;
      atlas.c_le_[idx] =
          atlas.entries_[i].centralizer.subset_of(atlas.entries_[j].centralizer);
      atlas.z_le_[idx] =
          atlas.entries_[i].center.subset_of(atlas.entries_[j].center);
      atlas.z_in_c_[idx] =
          atlas.entries_[i].center.subset_of(atlas.entries_[j].centralizer);
    }
  }

  for (int i = 0; i < k; ++i) {
    bool maximal = true;
    bool minimal = true;
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      if (atlas.mat(atlas.c_le_, i, j)) maximal = false;
      if (atlas.mat(atlas.c_le_, j, i)) minimal = false;
    }
    atlas.entries_[i].centralizer_maximal = maximal;
    atlas.entries_[i].centralizer_minimal = minimal;
    if (maximal) atlas.maximal_ids_.push_back(i);
    if (minimal) atlas.minimal_ids_.push_back(i);
  }

  // Covering pairs: strict containments with nothing strictly between.
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j || !atlas.mat(atlas.c_le_, i, j)) continue;
      bool covering = true;
      for (int l = 0; l < k && covering; ++l) {
        if (l == i || l == j) continue;
        if (atlas.mat(atlas.c_le_, i, l) && atlas.mat(atlas.c_le_, l, j)) {
          covering = false;
        }
      }
      if (covering) atlas.hasse_.emplace_back(i, j);
    }
  }
  std::sort(atlas.hasse_.begin(), atlas.hasse_.end());
  return atlas;
}

const AtlasEntry& CentralizerAtlas::entry(int id) const {
  if (id < 0 || id >= size()) {
    throw Error(Error::Code::BadIndex,
                "atlas entry id " + std::to_string(id) + " out of range");
  }
  return entries_[id];
}

int CentralizerAtlas::entry_of(int element) const {
  if (element < 0 || element >= group_->order()) {
    throw Error(Error::Code::BadIndex,
                "element index " + std::to_string(element) + " out of range");
  }
  const int id = elem_to_entry_[element];
  if (id < 0) {
    throw Error(Error::Code::CentralElement,
                "element " + group_->label(element) + " is central");
  }
  return id;
}

bool CentralizerAtlas::centralizer_contains(int i, int j) const {
  return mat(c_le_, i, j);
}

bool CentralizerAtlas::center_contains(int i, int j) const {
  return mat(z_le_, i, j);
}

bool CentralizerAtlas::center_in_centralizer(int i, int j) const {
  return mat(z_in_c_, i, j);
}

int CentralizerAtlas::phi_inverse(const SubgroupSet& center_subgroup) const {
  for (const AtlasEntry& e : entries_) {
    if (e.center == center_subgroup) return e.id;
  }
  throw Error(Error::Code::NotACenter,
              "subgroup of order " + std::to_string(center_subgroup.order()) +
                  " is not an element center of " + group_->name());
}

ElementMask CentralizerAtlas::zstar_class(int element) const {
  return entries_[entry_of(element)].zstar;
}

std::vector<int> maximal_center_ids(const CentralizerAtlas& atlas) {
  // Antitone route: maximal centers belong to minimal centralizers.
  std::vector<int> via_antitone = atlas.minimal_centralizer_ids();
  // Direct route: no other stored center strictly contains this one.
  std::vector<int> direct;
  for (int i = 0; i < atlas.size(); ++i) {
    bool maximal = true;
    for (int j = 0; j < atlas.size() && maximal; ++j) {
      if (j != i && atlas.center_contains(i, j)) maximal = false;
    }
    if (maximal) direct.push_back(i);
  }
  if (via_antitone != direct) {
    throw std::logic_error("antitone cross-check failed for maximal centers");
  }
  return direct;
}

std::vector<int> minimal_center_ids(const CentralizerAtlas& atlas) {
  std::vector<int> via_antitone = atlas.maximal_centralizer_ids();
  std::vector<int> direct;
  for (int i = 0; i < atlas.size(); ++i) {
    bool minimal = true;
    for (int j = 0; j < atlas.size() && minimal; ++j) {
      if (j != i && atlas.center_contains(j, i)) minimal = false;
    }
    if (minimal) direct.push_back(i);
  }
  if (via_antitone != direct) {
    throw std::logic_error("antitone cross-check failed for minimal centers");
  }
  return direct;
}

Star2Decomposition star2_decomposition(const CentralizerAtlas& atlas, int id) {
  const AtlasEntry& e = atlas.entry(id);
  Star2Decomposition out;
  for (int j = 0; j < atlas.size(); ++j) {
    if (j != id && atlas.centralizer_contains(id, j)) {
      out.proper_superset_ids.push_back(j);
    }
  }
  ElementMask superset_union(e.zstar.size());
  std::size_t total = 0;
  for (int j : out.proper_superset_ids) {
    superset_union |= atlas.entry(j).zstar;
    total += atlas.entry(j).zstar.count();
  }
  const ElementMask target =
      e.center.members() - atlas.center_subgroup().members();
  const ElementMask whole_union = e.zstar | superset_union;
  const bool disjoint = total + e.zstar.count() == whole_union.count();
  out.union_check = disjoint && whole_union == target &&
                    superset_union.is_proper_subset_of(target);
  return out;
}

IntersectionDecomposition intersection_decomposition(const CentralizerAtlas& atlas,
                                                     int i, int j) {
  if (i == j) {
    throw Error(Error::Code::BadIndex,
                "intersection decomposition needs two distinct entries");
  }
  const Group& g = atlas.group();
  const ElementMask inter =
      atlas.entry(i).center.members() & atlas.entry(j).center.members();
  if (inter == atlas.center_subgroup().members()) {
    return IntersectionDecomposition{IntersectionKind::CentralOnly,
                                     SubgroupSet(g, inter), true};
  }
  const ElementMask extra = inter - atlas.center_subgroup().members();
  ElementMask union_of_zs(inter.size());
  for (auto c = extra.find_first(); c != ElementMask::npos;
       c = extra.find_next(c)) {
    union_of_zs |= atlas.entry(atlas.entry_of(static_cast<int>(c))).center.members();
  }
  SubgroupSet generated = generated_subgroup(g, union_of_zs);
  return IntersectionDecomposition{IntersectionKind::GeneratedByCenters,
                                   generated, generated.members() == inter};
}

bool union_of_centers(const CentralizerAtlas& atlas, int id) {
  const AtlasEntry& e = atlas.entry(id);
  const ElementMask noncentral_members =
      e.centralizer.members() - atlas.center_subgroup().members();
  ElementMask acc(e.centralizer.members().size());
  for (auto b = noncentral_members.find_first(); b != ElementMask::npos;
       b = noncentral_members.find_next(b)) {
    acc |= atlas.entry(atlas.entry_of(static_cast<int>(b))).center.members();
  }
  return acc == e.centralizer.members();
}

}  // namespace centracover
