#pragma once

#include <array>
#include <optional>
#include <string>

#include "centracover/covers.hpp"

namespace centracover {

/// The four equivalent F-group conditions, each evaluated independently:
///  (1) no strict containment among distinct centralizers,
///  (2) b in Z(a) implies Z(a) = Z(b),
///  (3) Z(a) = Z(b) or Z(a) meet Z(b) = Z(G),
///  (4) Z(b) <= Z(a) implies Z(a) = Z(b).
struct FGroupCriteria {
  bool no_strict_containment = false;
  bool center_membership = false;
  bool intersection_dichotomy = false;
  bool center_containment = false;

  bool all_agree() const {
    return no_strict_containment == center_membership &&
           center_membership == intersection_dichotomy &&
           intersection_dichotomy == center_containment;
  }
  /// The defining condition (1).
  bool value() const { return no_strict_containment; }
  std::array<bool, 4> as_array() const {
    return {no_strict_containment, center_membership, intersection_dichotomy,
            center_containment};
  }
};

FGroupCriteria f_group_criteria(const CentralizerAtlas& atlas);

/// All noncentral-element centralizers abelian.
bool is_ca_group(const CentralizerAtlas& atlas);

/// The sets Z \ Z(G), Z in Z(G)-family, are pairwise disjoint and union to
/// the noncentral elements.
bool partition_check(const CentralizerAtlas& atlas);

/// Count of distinct noncentral centralizers modulo p for nonabelian
/// p-groups that are F-groups; `identity_ok` also verifies the class-size
/// identity |Z*| = |Z(G)| (|Z:Z(G)| - 1) per entry and
/// sum |Z*| + |Z(G)| = |G|.
struct ModPCount {
  bool applicable = false;
  std::string reason;  // "not a p-group" | "not an F-group" when inapplicable
  int p = 0;
  int n = 0;
  int residue = -1;
  bool identity_ok = false;
};
ModPCount mod_p_count(const CentralizerAtlas& atlas);

/// For p-groups that are F but not CA: a nonabelian centralizer C with
/// exp(C) = exp(Z(C)). The search follows the existence proof (largest
/// center exponent first) and an exhaustive scan; both must agree.
struct ExponentWitnessResult {
  bool applicable = false;
  std::string reason;
  std::optional<int> entry_id;
  bool proof_path_ok = false;
  bool scan_found = false;
};
ExponentWitnessResult exponent_witness(const CentralizerAtlas& atlas);

/// For F-groups: C(G) is an irredundant cover exactly when the group is
/// CA. `removable` names a redundant centralizer in the non-CA case.
struct CaIrredundanceResult {
  bool applicable = false;
  std::string reason;
  bool ca = false;
  bool irredundant = false;
  bool consistent = false;
  std::optional<int> removable;
};
CaIrredundanceResult ca_irredundance_check(const CentralizerAtlas& atlas);

/// For F-groups, three consequences checked over all noncentral pairs:
///  cor_5_2: b not in Z(a) implies Z(a) meet Z(b) = Z(G);
///  cor_5_4: C(a) meet Z(b) = Z(G) or Z(b) <= C(a);
///  lemma_5_7: C(a) nonabelian iff some b outside C(a) has
///             Z(G) < C(a) meet C(b).
struct FGroupCorollaries {
  bool applicable = false;
  std::string reason;
  bool cor_5_2 = false;
  bool cor_5_4 = false;
  bool lemma_5_7 = false;
};
FGroupCorollaries f_group_corollaries(const CentralizerAtlas& atlas);

struct ClassificationReport {
  bool is_f_group = false;
  std::array<bool, 4> f_criteria{};
  bool is_ca_group = false;
  bool partition_holds = false;
  std::optional<int> p;
  int n_centralizers = 0;
  std::optional<int> n_mod_p;
  std::optional<int> exponent_witness_entry;
  std::optional<bool> ca_irredundance_consistent;  // absent for non-F groups
};

ClassificationReport classify(const CentralizerAtlas& atlas);

}  // namespace centracover
