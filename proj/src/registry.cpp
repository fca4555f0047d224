#include <chrono>
#include <random>

#include "centracover/report.hpp"

namespace centracover {

namespace {

using json = nlohmann::ordered_json;

json element_json(const Group& g, int e) {
  return json{{"index", e}, {"label", g.label(e)}};
}

json entry_json(const CentralizerAtlas& atlas, int id) {
  return json{{"entry", id},
              {"representative",
               element_json(atlas.group(), atlas.entry(id).representative)}};
}

CheckResult pass(std::string note = "") {
  return CheckResult{"pass", std::move(note), json()};
}
CheckResult fail(json witness, std::string note = "") {
  return CheckResult{"fail", std::move(note), std::move(witness)};
}
CheckResult skipped(std::string reason) {
  return CheckResult{"skipped(hypothesis)", std::move(reason), json()};
}

/// Runs `check` on every nonempty subset of {0..k-1} when k <= cap, and on
/// `samples` seeded random nonempty subsets otherwise. Returns the first
/// failing subset, if any, through `counterexample`.
template <typename Fn>
bool sweep_subsets(int k, int cap, int samples, std::uint64_t seed, Fn&& check,
                   std::vector<int>* counterexample, bool* exhaustive) {
  std::vector<int> ids;
  if (k <= cap && k < 64) {
    *exhaustive = true;
    for (std::uint64_t mask = 1; mask < (1ull << k); ++mask) {
      ids.clear();
      for (int i = 0; i < k; ++i) {
        if (mask & (1ull << i)) ids.push_back(i);
      }
      if (!check(ids)) {
        *counterexample = ids;
        return false;
      }
    }
    return true;
  }
  *exhaustive = false;
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    ids.clear();
    for (int i = 0; i < k; ++i) {
      if (rng() & 1) ids.push_back(i);
    }
    if (ids.empty()) continue;
    if (!check(ids)) {
      *counterexample = ids;
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Containment and correspondence checks

CheckResult check_lemma_2_1(const GroupAnalysis& an, const VerifyOptions&) {
  const CentralizerAtlas& atlas = an.atlas();
  const Group& g = an.group();
  for (int a = 0; a < g.order(); ++a) {
    if (!atlas.noncentral_mask().test(a)) continue;
    const int ea = atlas.entry_of(a);
    for (int b = 0; b < g.order(); ++b) {
      if (!atlas.noncentral_mask().test(b)) continue;
      const int eb = atlas.entry_of(b);
      const bool in_c = atlas.entry(eb).centralizer.contains(a);
      const bool za_cb = atlas.center_in_centralizer(ea, eb);
      const bool zb_ca = atlas.center_in_centralizer(eb, ea);
      if (in_c != za_cb || za_cb != zb_ca) {
        return fail(json{{"a", element_json(g, a)}, {"b", element_json(g, b)}});
      }
    }
  }
  return pass();
}

CheckResult check_lemma_2_2(const GroupAnalysis& an, const VerifyOptions&) {
  const CentralizerAtlas& atlas = an.atlas();
  const Group& g = an.group();
  for (const AtlasEntry& e : atlas.entries()) {
    const bool equals_center = e.centralizer == e.center;
    const bool abelian = e.centralizer_abelian;
    bool maximal_abelian = abelian;
    if (abelian) {
      const std::vector<int> members = e.centralizer.elements();
      for (int x = 0; x < g.order() && maximal_abelian; ++x) {
        if (e.centralizer.contains(x)) continue;
        bool commutes_with_all = true;
        for (int m : members) {
          if (!g.commutes(x, m)) {
            commutes_with_all = false;
            break;
          }
        }
        if (!commutes_with_all) continue;
        std::vector<int> gens = members;
        gens.push_back(x);
        if (is_abelian_subgroup(g, generated_subgroup(g, gens))) {
          maximal_abelian = false;
        }
      }
    }
    if (equals_center != abelian || abelian != maximal_abelian) {
      return fail(json{{"entry", entry_json(atlas, e.id)},
                       {"equals_center", equals_center},
                       {"abelian", abelian},
                       {"maximal_abelian", maximal_abelian}});
    }
  }
  return pass();
}

CheckResult check_cor_2_3(const GroupAnalysis& an, const VerifyOptions&) {
  const CentralizerAtlas& atlas = an.atlas();
  for (int i = 0; i < atlas.size(); ++i) {
    if (!union_of_centers(atlas, i)) return fail(entry_json(atlas, i));
  }
  return pass();
}

CheckResult check_lemma_2_3(const GroupAnalysis& an, const VerifyOptions&) {
  const CentralizerAtlas& atlas = an.atlas();
  for (int i = 0; i < atlas.size(); ++i) {
    for (int j = 0; j < atlas.size(); ++j) {
      if (atlas.centralizer_contains(i, j) != atlas.center_contains(j, i)) {
        return fail(json{{"entry_i", i}, {"entry_j", j}});
      }
      if (i != j && atlas.entry(i).center == atlas.entry(j).center) {
        return fail(json{{"entry_i", i},
                         {"entry_j", j},
                         {"detail", "distinct entries share a center"}});
      }
    }
  }
  return pass();
}

CheckResult check_cor_2_4(const GroupAnalysis& an, const VerifyOptions&) {
  const CentralizerAtlas& atlas = an.atlas();
  const Group& g = an.group();
  for (const AtlasEntry& e : atlas.entries()) {
    // Global route: C_G(C_G(g)).
    const SubgroupSet global = centralizer_of_set(g, e.centralizer);
    // Subgroup-center route: members of C commuting with all of C.
    ElementMask inner(static_cast<std::size_t>(g.order()));
    const std::vector<int> members = e.centralizer.elements();
    for (int x : members) {
      bool central_in_c = true;
      for (int y : members) {
        if (!g.commutes(x, y)) {
          central_in_c = false;
          break;
        }
      }
      if (central_in_c) inner.set(x);
    }
    if (global != e.center || inner != e.center.members()) {
      return fail(json{{"entry", entry_json(atlas, e.id)},
                       {"detail", "center routes disagree"}});
    }
    int roundtrip = -1;
    try {
      roundtrip = atlas.phi_inverse(atlas.phi(e.id));
    } catch (const Error&) {
      roundtrip = -1;
    }
    if (roundtrip != e.id) {
      return fail(json{{"entry", entry_json(atlas, e.id)},
                       {"detail", "phi round-trip failed"}});
    }
    if (centralizer_of_set(g, e.center) != e.centralizer) {
      return fail(json{{"entry", entry_json(atlas, e.id)},
                       {"detail", "C_G(Z(g)) differs from C_G(g)"}});
    }
  }
  return pass();
}

CheckResult check_lemma_2_5(const GroupAnalysis& an, const VerifyOptions&) {
  const CentralizerAtlas& atlas = an.atlas();
  const Group& g = an.group();
  const ElementMask& zg = atlas.center_subgroup().members();
  for (int i = 0; i < atlas.size(); ++i) {
    for (int j = i + 1; j < atlas.size(); ++j) {
      const IntersectionDecomposition dec = intersection_decomposition(atlas, i, j);
      if (!dec.matches_intersection) {
        return fail(json{{"entry_i", i},
                         {"entry_j", j},
                         {"detail", "generated subgroup misses intersection"}});
      }
      if (dec.kind == IntersectionKind::CentralOnly) continue;
      // Literal setwise product of the Z(c), in ascending element order.
      const ElementMask inter =
          atlas.entry(i).center.members() & atlas.entry(j).center.members();
      ElementMask product(inter.size());
      product.set(g.identity());
      for (auto c = (inter - zg).find_first(); c != ElementMask::npos;
           c = (inter - zg).find_next(c)) {
        const ElementMask& zc =
            atlas.entry(atlas.entry_of(static_cast<int>(c))).center.members();
        ElementMask next(inter.size());
        for (auto p = product.find_first(); p != ElementMask::npos;
             p = product.find_next(p)) {
          for (auto z = zc.find_first(); z != ElementMask::npos;
               z = zc.find_next(z)) {
            next.set(g.at(static_cast<int>(p), static_cast<int>(z)));
          }
        }
        product = std::move(next);
      }
      if (product != inter) {
        return fail(json{{"entry_i", i},
                         {"entry_j", j},
                         {"detail", "setwise product misses intersection"}});
      }
    }
  }
  return pass();
}

// ---------------------------------------------------------------------------
// Cover structure

CheckResult check_prop_3_1(const GroupAnalysis& an, const VerifyOptions& opts) {
  const CentralizerAtlas& atlas = an.atlas();
  auto criterion = [&](const std::vector<int>& ids) {
    // Every center contained in some member.
    for (int j = 0; j < atlas.size(); ++j) {
      bool contained = false;
      for (int id : ids) {
        if (atlas.center_in_centralizer(j, id)) {
          contained = true;
          break;
        }
      }
      if (!contained) return false;
    }
    return true;
  };
  std::vector<int> counterexample;
  bool exhaustive = false;
  const bool ok = sweep_subsets(
      atlas.size(), opts.criterion_cap, opts.sample_count, opts.seed,
      [&](const std::vector<int>& ids) {
        return family_covers(atlas, ids, FamilySide::Centralizers) ==
               criterion(ids);
      },
      &counterexample, &exhaustive);
  const std::string note = exhaustive ? "exhaustive" : "sampled";
  if (!ok) return fail(json{{"family", counterexample}}, note);
  return pass(note);
}

CheckResult check_lemma_3_2(const GroupAnalysis& an, const VerifyOptions&) {
  const CentralizerAtlas& atlas = an.atlas();
  const Group& g = an.group();
  for (int i = 0; i < atlas.size(); ++i) {
    if (!star2_decomposition(atlas, i).union_check) {
      return fail(json{{"entry", entry_json(atlas, i)},
                       {"detail", "Z* decomposition failed"}});
    }
    const AtlasEntry& e = atlas.entry(i);
    for (int h = 0; h < g.order(); ++h) {
      if (!atlas.noncentral_mask().test(h)) continue;
      const int eh = atlas.entry_of(h);
      const bool m1 = e.center.contains(h);
      const bool m2 = atlas.entry(eh).zstar.is_subset_of(e.center.members());
      const bool m3 = atlas.center_contains(eh, i);
      const bool m4 = atlas.centralizer_contains(i, eh);
      if (m1 != m2 || m2 != m3 || m3 != m4) {
        return fail(json{{"entry", entry_json(atlas, i)},
                         {"h", element_json(g, h)}});
      }
    }
  }
  return pass();
}

CheckResult check_lemma_3_4(const GroupAnalysis& an, const VerifyOptions&) {
  const CentralizerAtlas& atlas = an.atlas();
  const std::vector<int> maximal = maximal_center_ids(atlas);
  for (int i = 0; i < atlas.size(); ++i) {
    bool contains_maximal = false;
    for (int m : maximal) {
      if (atlas.center_in_centralizer(m, i)) {
        contains_maximal = true;
        break;
      }
    }
    if (!contains_maximal) return fail(entry_json(atlas, i));
  }
  return pass();
}

CheckResult check_cor_3_5(const GroupAnalysis& an, const VerifyOptions&) {
  const CentralizerAtlas& atlas = an.atlas();
  for (int m : maximal_center_ids(atlas)) {
    for (int j = 0; j < atlas.size(); ++j) {
      const bool contains_class =
          atlas.entry(m).zstar.is_subset_of(atlas.entry(j).center.members());
      if (contains_class != (j == m)) {
        return fail(json{{"maximal_entry", m}, {"other_entry", j}});
      }
    }
  }
  return pass();
}

CheckResult family_cover_check(const CentralizerAtlas& atlas,
                               const CoverFamily& family) {
  const CoverVerdict verdict = is_cover(atlas, family);
  if (verdict.is_cover) return pass();
  return fail(json{
      {"uncovered", element_json(atlas.group(), *verdict.uncovered_witness)}});
}

CheckResult check_thm_1_1a(const GroupAnalysis& an, const VerifyOptions&) {
  return family_cover_check(an.atlas(), maximal_centralizer_cover(an.atlas()));
}

CheckResult check_thm_1_1b(const GroupAnalysis& an, const VerifyOptions&) {
  return family_cover_check(an.atlas(), minimal_centralizer_cover(an.atlas()));
}

CheckResult check_thm_1_1c(const GroupAnalysis& an, const VerifyOptions&) {
  return family_cover_check(an.atlas(), maximal_center_cover(an.atlas()));
}

CheckResult check_thm_1_2(const GroupAnalysis& an, const VerifyOptions& opts) {
  const UniquenessResult result = center_cover_uniqueness(
      an.atlas(), opts.uniqueness_cap, opts.sample_count, opts.seed);
  const std::string note = result.exhaustive ? "exhaustive" : "criterion";
  if (!result.holds) return fail(json{{"detail", "uniqueness violated"}}, note);
  return pass(note);
}

CheckResult check_thm_3_6(const GroupAnalysis& an, const VerifyOptions&) {
  const CoverVerdict verdict =
      is_irredundant_cover(an.atlas(), maximal_center_cover(an.atlas()));
  if (!*verdict.is_irredundant) {
    return fail(json{{"redundant_entry", *verdict.redundant_member}});
  }
  return pass();
}

CheckResult check_thm_1_3a(const GroupAnalysis& an, const VerifyOptions& opts) {
  const CentralizerAtlas& atlas = an.atlas();
  const std::vector<int> maximal = maximal_center_ids(atlas);
  auto criterion = [&](const std::vector<int>& ids) {
    for (int m : maximal) {
      bool contained = false;
      for (int id : ids) {
        if (atlas.center_in_centralizer(m, id)) {
          contained = true;
          break;
        }
      }
      if (!contained) return false;
    }
    return true;
  };
  std::vector<int> counterexample;
  bool exhaustive = false;
  const bool ok = sweep_subsets(
      atlas.size(), opts.criterion_cap, opts.sample_count, opts.seed,
      [&](const std::vector<int>& ids) {
        return family_covers(atlas, ids, FamilySide::Centralizers) ==
               criterion(ids);
      },
      &counterexample, &exhaustive);
  const std::string note = exhaustive ? "exhaustive" : "sampled";
  if (!ok) return fail(json{{"family", counterexample}}, note);
  return pass(note);
}

CheckResult check_thm_1_3b(const GroupAnalysis& an, const VerifyOptions& opts) {
  const SizeBoundResult result =
      irredundant_size_bound(an.atlas(), opts.enumeration_cap);
  const std::string note = result.complete ? "complete" : "partial";
  if (result.max_observed > result.bound) {
    return fail(json{{"bound", result.bound},
                     {"max_observed", result.max_observed}},
                note);
  }
  return pass(note);
}

CheckResult check_thm_1_4(const GroupAnalysis& an, const VerifyOptions& opts) {
  const bool exhaustive = an.atlas().size() <= opts.domination_cap;
  const bool ok =
      cover_domination_equivalence(an.atlas(), an.graph(), opts.domination_cap,
                                   opts.sample_count, opts.seed);
  const std::string note = exhaustive ? "exhaustive" : "sampled";
  if (!ok) return fail(json{{"detail", "equivalence violated"}}, note);
  return pass(note);
}

CheckResult check_thm_4_2(const GroupAnalysis& an, const VerifyOptions&) {
  const NonadjacencyResult r = minimal_center_nonadjacency(an.atlas(), an.graph());
  if (r.hypothesis && !r.conclusion) {
    return fail(json{{"hypothesis", r.hypothesis}, {"conclusion", r.conclusion}});
  }
  return pass(r.hypothesis ? "hypothesis holds" : "vacuous");
}

// ---------------------------------------------------------------------------
// F-group and CA-group structure

CheckResult check_thm_1_5(const GroupAnalysis& an, const VerifyOptions&) {
  const CentralizerAtlas& atlas = an.atlas();
  const bool f = f_group_criteria(atlas).value();
  const bool partition = partition_check(atlas);
  if (f != partition) {
    return fail(json{{"is_f_group", f}, {"partition_holds", partition}});
  }
  if (f) {
    std::size_t total = 0;
    for (const AtlasEntry& e : atlas.entries()) total += e.zstar.count();
    if (total + atlas.center_subgroup().order() !=
        static_cast<std::size_t>(an.group().order())) {
      return fail(json{{"detail", "Z* partition identity failed"}});
    }
  }
  return pass();
}

CheckResult check_lemma_5_1(const GroupAnalysis& an, const VerifyOptions&) {
  const FGroupCriteria c = f_group_criteria(an.atlas());
  if (!c.all_agree()) {
    return fail(json{{"criteria", c.as_array()}});
  }
  return pass();
}

CheckResult check_cor_5_2(const GroupAnalysis& an, const VerifyOptions&) {
  const FGroupCorollaries r = f_group_corollaries(an.atlas());
  if (!r.applicable) return skipped(r.reason);
  if (!r.cor_5_2) return fail(json{{"detail", "center intersection exceeds Z(G)"}});
  return pass();
}

CheckResult check_cor_5_3(const GroupAnalysis& an, const VerifyOptions&) {
  const CentralizerAtlas& atlas = an.atlas();
  const bool f = f_group_criteria(atlas).value();
  bool all_centralizers = true;
  for (const AtlasEntry& e : atlas.entries()) {
    if (!e.centralizer_maximal || !e.centralizer_minimal) {
      all_centralizers = false;
      break;
    }
  }
  bool all_centers = true;
  for (int i = 0; i < atlas.size() && all_centers; ++i) {
    for (int j = 0; j < atlas.size(); ++j) {
      if (i != j &&
          (atlas.center_contains(i, j) || atlas.center_contains(j, i))) {
        all_centers = false;
        break;
      }
    }
  }
  if (f != all_centralizers || all_centralizers != all_centers) {
    return fail(json{{"is_f_group", f},
                     {"all_centralizers_max_min", all_centralizers},
                     {"all_centers_max_min", all_centers}});
  }
  return pass();
}

CheckResult check_cor_5_4(const GroupAnalysis& an, const VerifyOptions&) {
  const FGroupCorollaries r = f_group_corollaries(an.atlas());
  if (!r.applicable) return skipped(r.reason);
  if (!r.cor_5_4) return fail(json{{"detail", "dichotomy violated"}});
  return pass();
}

CheckResult check_lemma_5_6(const GroupAnalysis& an, const VerifyOptions&) {
  const CentralizerAtlas& atlas = an.atlas();
  for (const AtlasEntry& e : atlas.entries()) {
    bool center_minimal = true;
    for (int j = 0; j < atlas.size(); ++j) {
      if (j != e.id && atlas.center_contains(j, e.id)) {
        center_minimal = false;
        break;
      }
    }
    const bool full_class =
        e.zstar == (e.center.members() - atlas.center_subgroup().members());
    if (e.centralizer_maximal != center_minimal || center_minimal != full_class) {
      return fail(json{{"entry", entry_json(atlas, e.id)},
                       {"centralizer_maximal", e.centralizer_maximal},
                       {"center_minimal", center_minimal},
                       {"full_zstar_class", full_class}});
    }
  }
  return pass();
}

CheckResult check_lemma_5_7(const GroupAnalysis& an, const VerifyOptions&) {
  const FGroupCorollaries r = f_group_corollaries(an.atlas());
  if (!r.applicable) return skipped(r.reason);
  if (!r.lemma_5_7) return fail(json{{"detail", "partner equivalence violated"}});
  return pass();
}

CheckResult check_ca_implies_f(const GroupAnalysis& an, const VerifyOptions&) {
  const bool ca = is_ca_group(an.atlas());
  const bool f = f_group_criteria(an.atlas()).value();
  if (ca && !f) return fail(json{{"is_ca_group", ca}, {"is_f_group", f}});
  return pass(ca ? "CA-group" : "vacuous");
}

CheckResult check_thm_1_6(const GroupAnalysis& an, const VerifyOptions&) {
  const ModPCount r = mod_p_count(an.atlas());
  if (!r.applicable) return skipped(r.reason);
  if (r.residue != 1 || !r.identity_ok) {
    return fail(json{{"p", r.p},
                     {"n", r.n},
                     {"residue", r.residue},
                     {"identity_ok", r.identity_ok}});
  }
  return pass("n=" + std::to_string(r.n) + " p=" + std::to_string(r.p));
}

CheckResult check_thm_5_9(const GroupAnalysis& an, const VerifyOptions&) {
  const ExponentWitnessResult r = exponent_witness(an.atlas());
  if (!r.applicable) return skipped(r.reason);
  if (!r.proof_path_ok || !r.scan_found) {
    return fail(json{{"proof_path_ok", r.proof_path_ok},
                     {"scan_found", r.scan_found}});
  }
  return pass("witness entry " + std::to_string(*r.entry_id));
}

CheckResult check_thm_1_7(const GroupAnalysis& an, const VerifyOptions&) {
  const CaIrredundanceResult r = ca_irredundance_check(an.atlas());
  if (!r.applicable) return skipped(r.reason);
  if (!r.consistent) {
    json witness{{"is_ca_group", r.ca}, {"irredundant", r.irredundant}};
    if (r.removable) {
      witness["removable"] = entry_json(an.atlas(), *r.removable);
    }
    return fail(witness);
  }
  return pass(r.ca ? "CA, irredundant" : "non-CA, redundant");
}

}  // namespace

const std::vector<TheoremCheck>& theorem_registry() {
  static const std::vector<TheoremCheck> registry = {
      {"lemma-2.1", "commutation and center containment equivalences",
       check_lemma_2_1},
      {"lemma-2.2", "abelian centralizer trichotomy", check_lemma_2_2},
      {"cor-2.3", "centralizers are unions of member centers", check_cor_2_3},
      {"lemma-2.3", "centralizer containment reverses center containment",
       check_lemma_2_3},
      {"cor-2.4", "phi is an order-reversing bijection", check_cor_2_4},
      {"lemma-2.5", "center intersections are central or generated by centers",
       check_lemma_2_5},
      {"prop-3.1", "cover iff every center contained in a member",
       check_prop_3_1},
      {"lemma-3.2", "Z* decomposition and membership equivalences",
       check_lemma_3_2},
      {"lemma-3.4", "every centralizer contains a maximal center",
       check_lemma_3_4},
      {"cor-3.5", "maximal center uniquely contains its Z* class",
       check_cor_3_5},
      {"thm-1.1a", "maximal centralizers form a cover", check_thm_1_1a},
      {"thm-1.1b", "minimal centralizers form a cover", check_thm_1_1b},
      {"thm-1.1c", "maximal centers form a cover", check_thm_1_1c},
      {"thm-1.2", "maximal centers are the unique irredundant center cover",
       check_thm_1_2},
      {"thm-3.6", "maximal centers form an irredundant cover", check_thm_3_6},
      {"thm-1.3a", "cover iff maximal centers contained in members",
       check_thm_1_3a},
      {"thm-1.3b", "irredundant covers have at most m members", check_thm_1_3b},
      {"thm-1.4", "cover iff dominating, irredundant iff minimal dominating",
       check_thm_1_4},
      {"thm-4.2", "nonadjacent minimal centers give irredundant maximal cover",
       check_thm_4_2},
      {"thm-1.5", "F-group iff centers partition the noncentral part",
       check_thm_1_5},
      {"lemma-5.1", "the four F-group criteria agree", check_lemma_5_1},
      {"cor-5.2", "F-group: distinct centers meet inside Z(G)", check_cor_5_2},
      {"cor-5.3", "F-group iff all members both maximal and minimal",
       check_cor_5_3},
      {"cor-5.4", "F-group: centralizer/center dichotomy", check_cor_5_4},
      {"lemma-5.6", "maximal centralizer iff minimal center iff full Z* class",
       check_lemma_5_6},
      {"lemma-5.7", "nonabelian centralizer iff deep external intersection",
       check_lemma_5_7},
      {"ca-implies-f", "CA-groups are F-groups", check_ca_implies_f},
      {"thm-1.6", "p-group F-group centralizer count is 1 mod p", check_thm_1_6},
      {"thm-5.9", "non-CA p-group F-group has an exponent-matching centralizer",
       check_thm_5_9},
      {"thm-1.7", "C(G) irredundant iff CA-group", check_thm_1_7},
  };
  return registry;
}

bool theorem_id_known(const std::string& id) {
  for (const TheoremCheck& check : theorem_registry()) {
    if (id == check.id) return true;
  }
  return false;
}

bool TheoremReport::all_passed() const {
  for (const TheoremResult& r : results) {
    if (r.status == "fail") return false;
  }
  return true;
}

TheoremReport run_theorems(const GroupAnalysis& analysis,
                           const VerifyOptions& opts) {
  TheoremReport report;
  report.group_name = analysis.group().name();
  report.order = analysis.group().order();
  for (const TheoremCheck& check : theorem_registry()) {
    if (!opts.theorem_filter.empty()) {
      bool wanted = false;
      for (const std::string& id : opts.theorem_filter) {
        if (id == check.id) {
          wanted = true;
          break;
        }
      }
      if (!wanted) continue;
    }
    const auto start = std::chrono::steady_clock::now();
    CheckResult result;
    try {
      result = check.fn(analysis, opts);
    } catch (const std::exception& e) {
      result = fail(json{{"error", e.what()}});
    }
    const auto stop = std::chrono::steady_clock::now();
    const double millis =
        std::chrono::duration<double, std::milli>(stop - start).count();
    report.results.push_back(TheoremResult{check.id, result.status, result.note,
                                           result.witness, millis});
  }
  return report;
}

}  // namespace centracover
