#include "centracover/report.hpp"

#include <sstream>

namespace centracover {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchema = "centracover/1";
constexpr const char* kEdgeRule =
    "distinct vertices Z(g), Z(h) adjacent iff Z(g) <= C_G(h); equivalently "
    "the representatives commute";

json element_json(const Group& g, int e) {
  return json{{"index", e}, {"label", g.label(e)}};
}

json group_json(const GroupAnalysis& an) {
  const Group& g = an.group();
  return json{{"name", g.name()},
              {"order", g.order()},
              {"source", g.source()},
              {"abelian", g.is_abelian()},
              {"center_order", an.atlas().center_subgroup().order()},
              {"associativity_check", assoc_check_name(g.associativity_check())}};
}

json atlas_json(const GroupAnalysis& an) {
  const CentralizerAtlas& atlas = an.atlas();
  json entries = json::array();
  for (const AtlasEntry& e : atlas.entries()) {
    entries.push_back(json{
        {"id", e.id},
        {"representative", element_json(an.group(), e.representative)},
        {"centralizer_order", e.centralizer.order()},
        {"center_order", e.center.order()},
        {"zstar_size", static_cast<int>(e.zstar.count())},
        {"centralizer_maximal", e.centralizer_maximal},
        {"centralizer_minimal", e.centralizer_minimal},
        {"centralizer_abelian", e.centralizer_abelian}});
  }
  json hasse = json::array();
  for (auto [sub, super] : atlas.hasse_edges()) {
    hasse.push_back(json::array({sub, super}));
  }
  return json{{"entry_count", atlas.size()},
              {"entries", std::move(entries)},
              {"hasse_edges", std::move(hasse)},
              {"maximal_centralizer_ids", atlas.maximal_centralizer_ids()},
              {"minimal_centralizer_ids", atlas.minimal_centralizer_ids()},
              {"maximal_center_ids", maximal_center_ids(atlas)},
              {"minimal_center_ids", minimal_center_ids(atlas)}};
}

json family_json(const CentralizerAtlas& atlas, const CoverFamily& family) {
  const CoverVerdict verdict = is_cover(atlas, family);
  json out{{"ids", family.member_entry_ids}, {"is_cover", verdict.is_cover}};
  if (verdict.is_cover) {
    const CoverVerdict full = is_irredundant_cover(atlas, family);
    out["irredundant"] = *full.is_irredundant;
    if (full.redundant_member) out["redundant_member"] = *full.redundant_member;
  }
  return out;
}

json covers_json(const GroupAnalysis& an, const VerifyOptions& opts) {
  const CentralizerAtlas& atlas = an.atlas();
  const UniquenessResult uniq = center_cover_uniqueness(
      atlas, opts.uniqueness_cap, opts.sample_count, opts.seed);
  const SizeBoundResult bound =
      irredundant_size_bound(atlas, opts.enumeration_cap);
  return json{
      {"maximal_centralizers", family_json(atlas, maximal_centralizer_cover(atlas))},
      {"minimal_centralizers", family_json(atlas, minimal_centralizer_cover(atlas))},
      {"maximal_centers", family_json(atlas, maximal_center_cover(atlas))},
      {"center_cover_uniqueness",
       json{{"holds", uniq.holds}, {"exhaustive", uniq.exhaustive}}},
      {"irredundant_size_bound", json{{"bound", bound.bound},
                                      {"max_observed", bound.max_observed},
                                      {"complete", bound.complete}}}};
}

json graph_json(const GroupAnalysis& an) {
  json edges = json::array();
  for (auto [i, j] : an.graph().edges()) edges.push_back(json::array({i, j}));
  const NonadjacencyResult nonadj =
      minimal_center_nonadjacency(an.atlas(), an.graph());
  return json{{"edge_rule", kEdgeRule},
              {"vertex_count", an.graph().vertex_count()},
              {"edges", std::move(edges)},
              {"minimal_center_nonadjacency",
               json{{"hypothesis", nonadj.hypothesis},
                    {"conclusion", nonadj.conclusion}}}};
}

json classification_json(const GroupAnalysis& an) {
  const ClassificationReport r = classify(an.atlas());
  json out{{"is_f_group", r.is_f_group},
           {"f_criteria", r.f_criteria},
           {"is_ca_group", r.is_ca_group},
           {"partition_holds", r.partition_holds},
           {"p", nullptr},
           {"n_centralizers", r.n_centralizers},
           {"n_mod_p", nullptr},
           {"exponent_witness", nullptr},
           {"ca_irredundance_consistent", nullptr}};
  if (r.p) out["p"] = *r.p;
  if (r.n_mod_p) out["n_mod_p"] = *r.n_mod_p;
  if (r.exponent_witness_entry) out["exponent_witness"] = *r.exponent_witness_entry;
  if (r.ca_irredundance_consistent) {
    out["ca_irredundance_consistent"] = *r.ca_irredundance_consistent;
  }
  return out;
}

json theorem_result_json(const TheoremResult& r, bool include_timing) {
  json out{{"id", r.id}, {"status", r.status}};
  if (!r.note.empty()) out["note"] = r.note;
  if (!r.witness.is_null()) out["witness"] = r.witness;
  if (include_timing) out["millis"] = r.millis;
  return out;
}

}  // namespace

GroupAnalysis GroupAnalysis::make(Group g) {
  return GroupAnalysis(CentralizerAtlas::build(std::move(g)));
}

nlohmann::ordered_json analysis_json(const GroupAnalysis& analysis,
                                     const VerifyOptions& opts) {
  return json{{"schema", kSchema},
              {"group", group_json(analysis)},
              {"atlas", atlas_json(analysis)},
              {"covers", covers_json(analysis, opts)},
              {"graph", graph_json(analysis)},
              {"classification", classification_json(analysis)}};
}

std::string analysis_text(const GroupAnalysis& analysis,
                          const VerifyOptions& opts) {
  const CentralizerAtlas& atlas = analysis.atlas();
  std::ostringstream out;
  out << "group " << analysis.group().name() << " (order "
      << analysis.group().order() << ", center order "
      << atlas.center_subgroup().order() << ")\n";
  out << "  distinct centralizers: " << atlas.size() << " ("
      << atlas.maximal_centralizer_ids().size() << " maximal, "
      << atlas.minimal_centralizer_ids().size() << " minimal)\n";
  for (const AtlasEntry& e : atlas.entries()) {
    out << "    [" << e.id << "] C(" << analysis.group().label(e.representative)
        << ") |C|=" << e.centralizer.order() << " |Z|=" << e.center.order()
        << " |Z*|=" << e.zstar.count() << (e.centralizer_maximal ? " max" : "")
        << (e.centralizer_minimal ? " min" : "")
        << (e.centralizer_abelian ? " abelian" : "") << "\n";
  }
  const ClassificationReport r = classify(atlas);
  out << "  F-group: " << (r.is_f_group ? "yes" : "no")
      << ", CA-group: " << (r.is_ca_group ? "yes" : "no");
  if (r.n_mod_p) out << ", n mod p = " << *r.n_mod_p;
  out << "\n";
  out << "  graph: " << analysis.graph().vertex_count() << " vertices, "
      << analysis.graph().edges().size() << " edges\n";
  (void)opts;
  return out.str();
}

nlohmann::ordered_json verify_json(const std::vector<TheoremReport>& reports,
                                   const VerifyOptions& opts) {
  json results = json::array();
  int failures = 0;
  for (const TheoremReport& report : reports) {
    json theorems = json::array();
    for (const TheoremResult& r : report.results) {
      theorems.push_back(theorem_result_json(r, opts.include_timing));
      if (r.status == "fail") ++failures;
    }
    results.push_back(json{{"group", report.group_name},
                           {"order", report.order},
                           {"theorems", std::move(theorems)}});
  }
  return json{
      {"schema", kSchema}, {"results", std::move(results)}, {"failures", failures}};
}

std::string verify_text(const std::vector<TheoremReport>& reports,
                        const VerifyOptions& opts) {
  std::ostringstream out;
  int failures = 0;
  for (const TheoremReport& report : reports) {
    out << "group " << report.group_name << " (order " << report.order << ")\n";
    for (const TheoremResult& r : report.results) {
      out << "  " << r.id;
      for (std::size_t pad = r.id.size(); pad < 12; ++pad) out << ' ';
      out << ' ' << r.status;
      if (!r.note.empty()) out << "  [" << r.note << "]";
      if (opts.include_timing) out << "  (" << r.millis << " ms)";
      out << "\n";
      if (r.status == "fail") {
        ++failures;
        if (!r.witness.is_null()) out << "    witness: " << r.witness.dump() << "\n";
      }
    }
  }
  out << "summary: " << reports.size() << " group(s), " << failures
      << " failure(s)\n";
  return out.str();
}

}  // namespace centracover
