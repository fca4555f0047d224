// Regenerates data/catalog_expected.json from the naive oracle
// implementations. The output is frozen in the repository and the
// acceptance suite diffs the library's recomputation against it, so this
// tool must never call the library's atlas/cover path.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <json.hpp>

#include "centracover/catalog.hpp"
#include "../tests/oracle.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace centracover;

const std::map<std::string, std::string> kConstruction = {
    {"s3", "permutation closure on 3 points: (1 2 3), (1 2)"},
    {"s4", "permutation closure on 4 points: (1 2 3 4), (1 2)"},
    {"a4", "permutation closure on 4 points: (1 2 3), (2 3 4)"},
    {"a5", "permutation closure on 5 points: (1 2 3 4 5), (1 2 3)"},
    {"s5", "permutation closure on 5 points: (1 2 3 4 5), (1 2)"},
    {"d8", "dihedral group of order 8"},
    {"q8", "quaternion unit table"},
    {"d16", "dihedral group of order 16"},
    {"d8xC2", "direct product d8 x c2"},
    {"d8xd8", "direct product d8 x d8"},
    {"sl2_3", "2x2 matrices over F_3 with determinant 1"},
    {"frob21", "C7 : C3, x -> x^2 action on the 7-cycle"},
    {"heis27", "unitriangular 3x3 matrices over F_3"},
    {"es32_plus", "central product d8 * d8 over the common central involution"},
    {"es32_minus", "central product d8 * q8 over the common central involution"},
    {"heis125", "unitriangular 3x3 matrices over F_5"},
};

json value(int v, const std::string& provenance) {
  return json{{"value", v}, {"provenance", provenance}};
}
json value(bool v, const std::string& provenance) {
  return json{{"value", v}, {"provenance", provenance}};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string out_path =
      argc > 1 ? argv[1] : std::string("data/catalog_expected.json");
  json entries = json::array();
  for (const std::string& name : catalog_names()) {
    const Group g = catalog_build(name);
    const auto zg = oracle::center(g);
    const auto cents = oracle::distinct_centralizers(g);
    const int n = static_cast<int>(cents.size());
    const int n_max = static_cast<int>(oracle::maximal_members(cents).size());
    const int n_min = static_cast<int>(oracle::minimal_members(cents).size());
    const bool f = oracle::is_f_group(g);
    const bool ca = oracle::is_ca_group(g);
    const auto p = oracle::p_prime(g.order());

    // The s4 maximal/minimal counts are published values; everything else
    // is frozen from this brute-force computation.
    const bool published = name == "s4";
    const std::string tag = "bruteforce";

    json entry;
    entry["name"] = name;
    entry["construction"] = kConstruction.at(name);
    json expected;
    expected["order"] = value(g.order(), tag);
    expected["center_order"] = value(static_cast<int>(zg.size()), tag);
    expected["n_centralizers"] = value(n, tag);
    expected["n_maximal_centralizers"] = value(n_max, published ? "literature" : tag);
    expected["n_minimal_centralizers"] = value(n_min, published ? "literature" : tag);
    expected["is_f_group"] = value(f, tag);
    expected["is_ca_group"] = value(ca, tag);
    if (p && f) {
      expected["mod_p_residue"] = value(n % *p, tag);
    } else {
      expected["mod_p_residue"] = json{{"value", nullptr}, {"provenance", tag}};
    }
    entry["expected"] = std::move(expected);
    entries.push_back(std::move(entry));
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return 1;
  }
  out << entries.dump(2) << "\n";
  std::cout << "wrote " << out_path << "\n";
  return 0;
}
