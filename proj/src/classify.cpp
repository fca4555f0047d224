#include "centracover/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace centracover {

FGroupCriteria f_group_criteria(const CentralizerAtlas& atlas) {
  const int k = atlas.size();
  const ElementMask& zg = atlas.center_subgroup().members();
  FGroupCriteria c;

  c.no_strict_containment = true;
  for (int i = 0; i < k && c.no_strict_containment; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j && atlas.centralizer_contains(i, j)) {
        c.no_strict_containment = false;
        break;
      }
    }
  }

  // b in Z(a) => Z(a) = Z(b): some member of entry j's class lies in Z_i.
  c.center_membership = true;
  for (int i = 0; i < k && c.center_membership; ++i) {
    const ElementMask& zi = atlas.entry(i).center.members();
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      if ((atlas.entry(j).zstar & zi).any()) {
        c.center_membership = false;
        break;
      }
    }
  }

  c.intersection_dichotomy = true;
  for (int i = 0; i < k && c.intersection_dichotomy; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const ElementMask& zi = atlas.entry(i).center.members();
      const ElementMask& zj = atlas.entry(j).center.members();
      if (zi != zj && (zi & zj) != zg) {
        c.intersection_dichotomy = false;
        break;
      }
    }
  }

  c.center_containment = true;
  for (int i = 0; i < k && c.center_containment; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j && atlas.center_contains(j, i)) {
        c.center_containment = false;
        break;
      }
    }
  }
  return c;
}

bool is_ca_group(const CentralizerAtlas& atlas) {
  for (const AtlasEntry& e : atlas.entries()) {
    if (!e.centralizer_abelian) return false;
  }
  return true;
}

bool partition_check(const CentralizerAtlas& atlas) {
  const ElementMask& zg = atlas.center_subgroup().members();
  ElementMask acc(zg.size());
  std::size_t total = 0;
  for (const AtlasEntry& e : atlas.entries()) {
    const ElementMask piece = e.center.members() - zg;
    total += piece.count();
    acc |= piece;
  }
  return acc == atlas.noncentral_mask() && total == acc.count();
}

ModPCount mod_p_count(const CentralizerAtlas& atlas) {
  ModPCount out;
  const auto p = p_group_prime(atlas.group());
  if (!p) {
    out.reason = "not a p-group";
    return out;
  }
  if (!f_group_criteria(atlas).value()) {
    out.reason = "not an F-group";
    return out;
  }
  out.applicable = true;
  out.p = *p;
  out.n = atlas.size();
  out.residue = out.n % out.p;

  const int zg_order = atlas.center_subgroup().order();
  std::size_t zstar_total = 0;
  out.identity_ok = true;
  for (const AtlasEntry& e : atlas.entries()) {
    const std::size_t zstar_size = e.zstar.count();
    zstar_total += zstar_size;
    const std::size_t expected =
        static_cast<std::size_t>(zg_order) * (e.center.order() / zg_order - 1);
    if (zstar_size != expected) out.identity_ok = false;
  }
  if (zstar_total + static_cast<std::size_t>(zg_order) !=
      static_cast<std::size_t>(atlas.group().order())) {
    out.identity_ok = false;
  }
  return out;
}

ExponentWitnessResult exponent_witness(const CentralizerAtlas& atlas) {
  ExponentWitnessResult out;
  if (!p_group_prime(atlas.group())) {
    out.reason = "not a p-group";
    return out;
  }
  if (!f_group_criteria(atlas).value()) {
    out.reason = "not an F-group";
    return out;
  }
  if (is_ca_group(atlas)) {
    out.reason = "CA-group";
    return out;
  }
  out.applicable = true;
  const Group& g = atlas.group();

  // Proof path: among nonabelian centralizers pick the one whose center
  // has the largest exponent (least id on ties), then verify.
  int candidate = -1;
  int best_exp = 0;
  for (const AtlasEntry& e : atlas.entries()) {
    if (e.centralizer_abelian) continue;
    const int ze = subgroup_exponent(g, e.center);
    if (ze > best_exp) {
      best_exp = ze;
      candidate = e.id;
    }
  }
  if (candidate >= 0) {
    const AtlasEntry& e = atlas.entry(candidate);
    out.proof_path_ok =
        subgroup_exponent(g, e.centralizer) == subgroup_exponent(g, e.center);
  }

  int scan_hit = -1;
  for (const AtlasEntry& e : atlas.entries()) {
    if (e.centralizer_abelian) continue;
    if (subgroup_exponent(g, e.centralizer) == subgroup_exponent(g, e.center)) {
      scan_hit = e.id;
      break;
    }
  }
  out.scan_found = scan_hit >= 0;
  if (out.proof_path_ok) {
    out.entry_id = candidate;
  } else if (out.scan_found) {
    out.entry_id = scan_hit;
  }
  return out;
}

CaIrredundanceResult ca_irredundance_check(const CentralizerAtlas& atlas) {
  CaIrredundanceResult out;
  if (!f_group_criteria(atlas).value()) {
    out.reason = "not an F-group";
    return out;
  }
  out.applicable = true;
  out.ca = is_ca_group(atlas);
  std::vector<int> all_ids(atlas.size());
  for (int i = 0; i < atlas.size(); ++i) all_ids[i] = i;
  const CoverVerdict verdict = is_irredundant_cover(
      atlas, CoverFamily{all_ids, FamilySide::Centralizers});
  out.irredundant = *verdict.is_irredundant;
  out.removable = verdict.redundant_member;
  out.consistent = out.irredundant == out.ca;
  return out;
}

FGroupCorollaries f_group_corollaries(const CentralizerAtlas& atlas) {
  FGroupCorollaries out;
  if (!f_group_criteria(atlas).value()) {
    out.reason = "not an F-group";
    return out;
  }
  out.applicable = true;
  const int k = atlas.size();
  const Group& g = atlas.group();
  const ElementMask& zg = atlas.center_subgroup().members();
  const int zg_order = atlas.center_subgroup().order();

  out.cor_5_2 = true;
  for (int i = 0; i < k && out.cor_5_2; ++i) {
    const ElementMask& zi = atlas.entry(i).center.members();
    for (int j = 0; j < k; ++j) {
      if ((atlas.entry(j).zstar - zi).any()) {
        // Some b with C(b) = C_j lies outside Z_i.
        if ((zi & atlas.entry(j).center.members()) != zg) {
          out.cor_5_2 = false;
          break;
        }
      }
    }
  }

  out.cor_5_4 = true;
  for (int i = 0; i < k && out.cor_5_4; ++i) {
    const ElementMask& ci = atlas.entry(i).centralizer.members();
    for (int j = 0; j < k; ++j) {
      const ElementMask& zj = atlas.entry(j).center.members();
      if ((ci & zj) != zg && !atlas.center_in_centralizer(j, i)) {
        out.cor_5_4 = false;
        break;
      }
    }
  }

  out.lemma_5_7 = true;
  for (int i = 0; i < k && out.lemma_5_7; ++i) {
    const AtlasEntry& ei = atlas.entry(i);
    bool partner = false;
    for (int b = 0; b < g.order() && !partner; ++b) {
      if (!atlas.noncentral_mask().test(b) || ei.centralizer.contains(b)) continue;
      const ElementMask meet =
          ei.centralizer.members() &
          atlas.entry(atlas.entry_of(b)).centralizer.members();
      if (static_cast<int>(meet.count()) > zg_order) partner = true;
    }
    if (partner == ei.centralizer_abelian) out.lemma_5_7 = false;
  }
  return out;
}

ClassificationReport classify(const CentralizerAtlas& atlas) {
  ClassificationReport report;
  const FGroupCriteria criteria = f_group_criteria(atlas);
  if (!criteria.all_agree()) {
    throw std::logic_error("the four F-group criteria disagree");
  }
  report.f_criteria = criteria.as_array();
  report.is_f_group = criteria.value();
  report.is_ca_group = is_ca_group(atlas);
  report.partition_holds = partition_check(atlas);
  report.p = p_group_prime(atlas.group());
  report.n_centralizers = atlas.size();
  const ModPCount mp = mod_p_count(atlas);
  if (mp.applicable) report.n_mod_p = mp.residue;
  const ExponentWitnessResult ew = exponent_witness(atlas);
  if (ew.applicable) report.exponent_witness_entry = ew.entry_id;
  const CaIrredundanceResult ca = ca_irredundance_check(atlas);
  if (ca.applicable) report.ca_irredundance_consistent = ca.consistent;
  return report;
}

}  // namespace centracover
