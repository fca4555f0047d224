#pragma once

#include <optional>
#include <vector>

#include "centracover/atlas.hpp"

namespace centracover {

/// A family of atlas entries viewed either through their centralizers or
/// through their centers.
enum class FamilySide { Centralizers, Centers };

struct CoverFamily {
  std::vector<int> member_entry_ids;
  FamilySide side = FamilySide::Centralizers;
};

struct CoverVerdict {
  bool is_cover = false;
  std::optional<int> uncovered_witness;  // element index
  std::optional<bool> is_irredundant;
  std::optional<int> redundant_member;  // entry id
};

/// Union test over the family. Throws EmptyFamily; ids must be valid and
/// distinct (BadIndex).
CoverVerdict is_cover(const CentralizerAtlas& atlas, const CoverFamily& family);

/// Irredundance by single-member removal, which suffices because the union
/// is monotone in the family. Throws NotACover when the family does not
/// cover.
CoverVerdict is_irredundant_cover(const CentralizerAtlas& atlas,
                                  const CoverFamily& family);

CoverFamily maximal_centralizer_cover(const CentralizerAtlas& atlas);
CoverFamily minimal_centralizer_cover(const CentralizerAtlas& atlas);
CoverFamily maximal_center_cover(const CentralizerAtlas& atlas);

/// Exhaustive mode (|Z(G)| <= subset_cap) checks over every subset of the
/// center family that a subset covers exactly when it contains every
/// maximal center, and that the maximal centers are the unique irredundant
/// covering subset. Above the cap only the containment criterion and a
/// seeded sample are checked, reported via `exhaustive`.
struct UniquenessResult {
  bool holds = false;
  bool exhaustive = false;
};
UniquenessResult center_cover_uniqueness(const CentralizerAtlas& atlas,
                                         int subset_cap,
                                         int sample_count = 1000,
                                         std::uint64_t seed = kDefaultSeed);

/// True when every maximal center lies in some member centralizer.
bool cover_criterion(const CentralizerAtlas& atlas, const CoverFamily& family);

/// Depth-first enumeration of irredundant covering subfamilies of C(G)
/// with removal pruning; `bound` is the number of maximal centers and
/// `max_observed` the largest irredundant cover seen. `complete` is false
/// when the node cap cut the search short.
struct SizeBoundResult {
  int bound = 0;
  int max_observed = 0;
  bool complete = true;
  long covers_found = 0;
};
SizeBoundResult irredundant_size_bound(const CentralizerAtlas& atlas,
                                       long enumeration_cap = 1L << 20);

/// Internal helpers shared with the graph module and the registry; the
/// family is given as entry ids with no verdict bookkeeping.
ElementMask family_union(const CentralizerAtlas& atlas,
                         const std::vector<int>& ids, FamilySide side);
bool family_covers(const CentralizerAtlas& atlas, const std::vector<int>& ids,
                   FamilySide side);
bool family_irredundant(const CentralizerAtlas& atlas,
                        const std::vector<int>& ids, FamilySide side);

}  // namespace centracover
