#include "centracover/covers.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace centracover {

namespace {

void validate_family(const CentralizerAtlas& atlas, const CoverFamily& family) {
  if (family.member_entry_ids.empty()) {
    throw Error(Error::Code::EmptyFamily, "cover family is empty");
  }
  std::set<int> distinct;
  for (int id : family.member_entry_ids) {
    if (id < 0 || id >= atlas.size()) {
      throw Error(Error::Code::BadIndex,
                  "family entry id " + std::to_string(id) + " out of range");
    }
    if (!distinct.insert(id).second) {
      throw Error(Error::Code::BadIndex,
                  "family entry id " + std::to_string(id) + " repeated");
    }
  }
}

const ElementMask& member_mask(const CentralizerAtlas& atlas, int id,
                               FamilySide side) {
  const AtlasEntry& e = atlas.entry(id);
  return side == FamilySide::Centralizers ? e.centralizer.members()
                                          : e.center.members();
}

}  // namespace

ElementMask family_union(const CentralizerAtlas& atlas,
                         const std::vector<int>& ids, FamilySide side) {
  ElementMask acc(static_cast<std::size_t>(atlas.group().order()));
  for (int id : ids) acc |= member_mask(atlas, id, side);
  return acc;
}

bool family_covers(const CentralizerAtlas& atlas, const std::vector<int>& ids,
                   FamilySide side) {
  return family_union(atlas, ids, side).all();
}

bool family_irredundant(const CentralizerAtlas& atlas,
                        const std::vector<int>& ids, FamilySide side) {
  for (std::size_t drop = 0; drop < ids.size(); ++drop) {
    ElementMask acc(static_cast<std::size_t>(atlas.group().order()));
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (i != drop) acc |= member_mask(atlas, ids[i], side);
    }
    if (acc.all()) return false;
  }
  return true;
}

CoverVerdict is_cover(const CentralizerAtlas& atlas, const CoverFamily& family) {
  validate_family(atlas, family);
  const ElementMask acc = family_union(atlas, family.member_entry_ids, family.side);
  CoverVerdict verdict;
  verdict.is_cover = acc.all();
  if (!verdict.is_cover) {
    const ElementMask missing = ~acc;
    verdict.uncovered_witness = static_cast<int>(missing.find_first());
  }
  return verdict;
}

CoverVerdict is_irredundant_cover(const CentralizerAtlas& atlas,
                                  const CoverFamily& family) {
  CoverVerdict verdict = is_cover(atlas, family);
  if (!verdict.is_cover) {
    throw Error(Error::Code::NotACover,
                "family does not cover; element " +
                    atlas.group().label(*verdict.uncovered_witness) +
                    " is missing");
  }
  const auto& ids = family.member_entry_ids;
  verdict.is_irredundant = true;
  for (std::size_t drop = 0; drop < ids.size(); ++drop) {
    ElementMask acc(static_cast<std::size_t>(atlas.group().order()));
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (i != drop) acc |= member_mask(atlas, ids[i], family.side);
    }
    if (acc.all()) {
      verdict.is_irredundant = false;
      verdict.redundant_member = ids[drop];
      break;
    }
  }
  return verdict;
}

CoverFamily maximal_centralizer_cover(const CentralizerAtlas& atlas) {
  return CoverFamily{atlas.maximal_centralizer_ids(), FamilySide::Centralizers};
}

CoverFamily minimal_centralizer_cover(const CentralizerAtlas& atlas) {
  return CoverFamily{atlas.minimal_centralizer_ids(), FamilySide::Centralizers};
}

CoverFamily maximal_center_cover(const CentralizerAtlas& atlas) {
  return CoverFamily{maximal_center_ids(atlas), FamilySide::Centers};
}

UniquenessResult center_cover_uniqueness(const CentralizerAtlas& atlas,
                                         int subset_cap, int sample_count,
                                         std::uint64_t seed) {
  const int k = atlas.size();
  const std::vector<int> maximal = maximal_center_ids(atlas);
  std::vector<bool> is_maximal(k, false);
  for (int id : maximal) is_maximal[id] = true;

  auto contains_all_maximal = [&](const std::vector<int>& ids) {
    std::vector<bool> present(k, false);
    for (int id : ids) present[id] = true;
    for (int id : maximal) {
      if (!present[id]) return false;
    }
    return true;
  };
  auto check_subset = [&](const std::vector<int>& ids) {
    const bool covers = family_covers(atlas, ids, FamilySide::Centers);
    if (covers != contains_all_maximal(ids)) return false;
    if (covers) {
      const bool irredundant = family_irredundant(atlas, ids, FamilySide::Centers);
      const bool is_exactly_maximal =
          ids.size() == maximal.size() && contains_all_maximal(ids);
      if (irredundant != is_exactly_maximal) return false;
    }
    return true;
  };

  UniquenessResult result;
  if (k <= subset_cap && k < 64) {
    result.exhaustive = true;
    result.holds = true;
    std::vector<int> ids;
    for (std::uint64_t mask = 1; mask < (1ull << k); ++mask) {
      ids.clear();
      for (int i = 0; i < k; ++i) {
        if (mask & (1ull << i)) ids.push_back(i);
      }
      if (!check_subset(ids)) {
        result.holds = false;
        break;
      }
    }
    return result;
  }

  // Criterion mode: the maximal family itself plus a seeded sample.
  result.exhaustive = false;
  result.holds = family_covers(atlas, maximal, FamilySide::Centers) &&
                 family_irredundant(atlas, maximal, FamilySide::Centers);
  std::mt19937_64 rng(seed);
  std::vector<int> ids;
  for (int s = 0; s < sample_count && result.holds; ++s) {
    ids.clear();
    for (int i = 0; i < k; ++i) {
      if (rng() & 1) ids.push_back(i);
    }
    if (ids.empty()) continue;
    if (!check_subset(ids)) result.holds = false;
  }
  return result;
}

bool cover_criterion(const CentralizerAtlas& atlas, const CoverFamily& family) {
  validate_family(atlas, family);
  for (int m : maximal_center_ids(atlas)) {
    bool contained = false;
    for (int id : family.member_entry_ids) {
      if (atlas.center_in_centralizer(m, id)) {
        contained = true;
        break;
      }
    }
    if (!contained) return false;
  }
  return true;
}

namespace {

struct BoundSearch {
  const CentralizerAtlas& atlas;
  long cap;
  long nodes = 0;
  SizeBoundResult result;
  std::vector<int> chosen;

  bool dfs(int idx, const ElementMask& covered) {
    if (++nodes > cap) return false;
    if (covered.all()) {
      // Extending a cover only adds removable members, so stop here.
      if (family_irredundant(atlas, chosen, FamilySide::Centralizers)) {
        ++result.covers_found;
        result.max_observed =
            std::max(result.max_observed, static_cast<int>(chosen.size()));
      }
      return true;
    }
    if (idx == atlas.size()) return true;
    if (!dfs(idx + 1, covered)) return false;
    chosen.push_back(idx);
    const bool ok =
        dfs(idx + 1, covered | atlas.entry(idx).centralizer.members());
    chosen.pop_back();
    return ok;
  }
};

}  // namespace

SizeBoundResult irredundant_size_bound(const CentralizerAtlas& atlas,
                                       long enumeration_cap) {
  BoundSearch search{atlas, enumeration_cap, 0, {}, {}};
  search.result.bound = static_cast<int>(maximal_center_ids(atlas).size());
  ElementMask covered(static_cast<std::size_t>(atlas.group().order()));
  search.result.complete = search.dfs(0, covered);
  return search.result;
}

}  // namespace centracover
