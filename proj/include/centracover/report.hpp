#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "centracover/cgraph.hpp"
#include "centracover/classify.hpp"

namespace centracover {

/// Knobs for the verification sweeps. The caps bound the family sizes for
/// which subset sweeps run exhaustively; above a cap a seeded sample of
/// `sample_count` subsets is checked instead.
struct VerifyOptions {
  int uniqueness_cap = 20;          // thm-1.2: subsets of Z(G)
  int criterion_cap = 15;           // prop-3.1 / thm-1.3a: subsets of C(G)
  int domination_cap = 13;          // thm-1.4: subsets of C(G)
  int sample_count = 1000;
  long enumeration_cap = 1L << 20;  // thm-1.3b: DFS node budget
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::string> theorem_filter;  // empty = whole registry
  bool include_timing = false;
};

/// One fully analyzed group: its atlas and its centralizer graph.
class GroupAnalysis {
 public:
  static GroupAnalysis make(Group g);  // throws AbelianGroup

  const Group& group() const { return atlas_.group(); }
  const CentralizerAtlas& atlas() const { return atlas_; }
  const CentralizerGraph& graph() const { return graph_; }

 private:
  explicit GroupAnalysis(CentralizerAtlas atlas)
      : atlas_(std::move(atlas)), graph_(CentralizerGraph::build(atlas_)) {}

  CentralizerAtlas atlas_;
  CentralizerGraph graph_;
};

struct CheckResult {
  std::string status;  // "pass" | "fail" | "skipped(hypothesis)"
  std::string note;    // run mode or skip reason
  nlohmann::ordered_json witness;
};

/// The fixed theorem registry: every id names one checking operation and
/// appears exactly once per verified group.
struct TheoremCheck {
  const char* id;
  const char* summary;
  CheckResult (*fn)(const GroupAnalysis&, const VerifyOptions&);
};
const std::vector<TheoremCheck>& theorem_registry();
bool theorem_id_known(const std::string& id);

struct TheoremResult {
  std::string id;
  std::string status;
  std::string note;
  nlohmann::ordered_json witness;
  double millis = 0.0;
};

struct TheoremReport {
  std::string group_name;
  int order = 0;
  std::vector<TheoremResult> results;
  bool all_passed() const;
};

TheoremReport run_theorems(const GroupAnalysis& analysis,
                           const VerifyOptions& opts);

nlohmann::ordered_json analysis_json(const GroupAnalysis& analysis,
                                     const VerifyOptions& opts);
std::string analysis_text(const GroupAnalysis& analysis,
                          const VerifyOptions& opts);

nlohmann::ordered_json verify_json(const std::vector<TheoremReport>& reports,
                                   const VerifyOptions& opts);
std::string verify_text(const std::vector<TheoremReport>& reports,
                        const VerifyOptions& opts);

}  // namespace centracover
