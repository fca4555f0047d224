#include <future>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "centracover/catalog.hpp"
#include "centracover/dot.hpp"
#include "centracover/io.hpp"
#include "centracover/report.hpp"

namespace {

using namespace centracover;

constexpr int kExitOk = 0;
constexpr int kExitTheoremFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitAbelianInput = 3;

Group resolve_input(const std::string& input, int closure_cap) {
  if (input.rfind("catalog:", 0) == 0) {
    return catalog_build(input.substr(8));
  }
  return load_group_file(input, closure_cap);
}

std::vector<std::string> expand_inputs(const std::vector<std::string>& inputs) {
  std::vector<std::string> out;
  for (const std::string& input : inputs) {
    if (input == "catalog:*") {
      for (const std::string& name : catalog_names()) {
        out.push_back("catalog:" + name);
      }
    } else {
      out.push_back(input);
    }
  }
  return out;
}

struct CommonFlags {
  std::string format = "json";
  int subset_cap = 0;  // 0 = per-check defaults
  int closure_cap = kDefaultClosureCap;
  std::string seed_hex;
  bool timing = false;

  VerifyOptions options() const {
    VerifyOptions opts;
    if (subset_cap > 0) {
      opts.uniqueness_cap = subset_cap;
      opts.criterion_cap = subset_cap;
      opts.domination_cap = subset_cap;
    }
    if (!seed_hex.empty()) opts.seed = std::stoull(seed_hex, nullptr, 16);
    opts.include_timing = timing;
    return opts;
  }
};

void add_common_flags(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_option("--format", flags->format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--subset-cap", flags->subset_cap,
                  "Exhaustive subset sweep cap (overrides per-check defaults)");
  cmd->add_option("--closure-cap", flags->closure_cap,
                  "Permutation closure size cap");
  cmd->add_option("--seed", flags->seed_hex, "Sampling seed (hex)");
  cmd->add_flag("--timing", flags->timing,
                "Include wall-clock timings (breaks byte-identical output)");
}

int run_analyze(const std::string& input, const CommonFlags& flags,
                const std::string& dot) {
  const GroupAnalysis analysis =
      GroupAnalysis::make(resolve_input(input, flags.closure_cap));
  if (dot == "hasse") {
    std::cout << dot_hasse(analysis.atlas());
    return kExitOk;
  }
  if (dot == "graph") {
    std::cout << dot_centralizer_graph(analysis.atlas(), analysis.graph());
    return kExitOk;
  }
  const VerifyOptions opts = flags.options();
  if (flags.format == "text") {
    std::cout << analysis_text(analysis, opts);
  } else {
    std::cout << analysis_json(analysis, opts).dump(2) << "\n";
  }
  return kExitOk;
}

int run_verify(const std::vector<std::string>& inputs, const CommonFlags& flags,
               const std::string& theorems) {
  VerifyOptions opts = flags.options();
  if (!theorems.empty() && theorems != "all") {
    std::string id;
    for (char c : theorems + ",") {
      if (c == ',') {
        if (!id.empty()) {
          if (!theorem_id_known(id)) {
            throw Error(Error::Code::UnknownName, "unknown theorem id: " + id);
          }
          opts.theorem_filter.push_back(id);
          id.clear();
        }
      } else {
        id.push_back(c);
      }
    }
  }

  // Groups are independent; verify them concurrently and emit in input order.
  std::vector<std::future<TheoremReport>> futures;
  futures.reserve(inputs.size());
  for (const std::string& input : inputs) {
    futures.push_back(std::async(std::launch::async, [&, input] {
      const GroupAnalysis analysis =
          GroupAnalysis::make(resolve_input(input, flags.closure_cap));
      return run_theorems(analysis, opts);
    }));
  }
  std::vector<TheoremReport> reports;
  reports.reserve(inputs.size());
  for (auto& f : futures) reports.push_back(f.get());

  if (flags.format == "text") {
    std::cout << verify_text(reports, opts);
  } else {
    std::cout << verify_json(reports, opts).dump(2) << "\n";
  }
  for (const TheoremReport& report : reports) {
    if (!report.all_passed()) return kExitTheoremFailure;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"centralizer cover structure of finite groups"};
  app.require_subcommand(1);

  std::string analyze_input;
  std::string analyze_dot;
  CommonFlags analyze_flags;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Full structure report for one group");
  analyze->add_option("input", analyze_input,
                      "Group file or catalog:<name>")->required();
  analyze->add_option("--dot", analyze_dot, "Emit DOT instead of a report")
      ->check(CLI::IsMember({"hasse", "graph"}));
  add_common_flags(analyze, &analyze_flags);

  std::vector<std::string> verify_inputs;
  std::string verify_theorems = "all";
  CommonFlags verify_flags;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run the theorem registry against groups");
  verify->add_option("inputs", verify_inputs,
                     "Group files, catalog:<name>, or catalog:*")->required();
  verify->add_option("--theorems", verify_theorems,
                     "all or a comma-separated list of registry ids");
  add_common_flags(verify, &verify_flags);

  CLI::App* catalog = app.add_subcommand("catalog", "Built-in group catalog");
  CLI::App* catalog_list = catalog->add_subcommand("list", "List catalog groups");
  std::string emit_name;
  CLI::App* catalog_emit =
      catalog->add_subcommand("emit", "Write a catalog group as Cayley JSON");
  catalog_emit->add_option("name", emit_name, "Catalog group name")->required();
  catalog->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*analyze) return run_analyze(analyze_input, analyze_flags, analyze_dot);
    if (*verify) {
      return run_verify(expand_inputs(verify_inputs), verify_flags,
                        verify_theorems);
    }
    if (*catalog_list) {
      for (const std::string& name : catalog_names()) {
        std::cout << name << " (order " << catalog_build(name).order() << ")\n";
      }
      return kExitOk;
    }
    if (*catalog_emit) {
      std::cout << cayley_json(catalog_build(emit_name)).dump(2) << "\n";
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Error::Code::AbelianGroup ? kExitAbelianInput
                                                 : kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
