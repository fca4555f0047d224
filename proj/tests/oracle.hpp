#pragma once

// Naive reference implementations over std::set<int>, kept deliberately
// simple and independent of the library's bitmask machinery. Used by the
// test suites and by the catalog expected-value generator.

#include <optional>
#include <set>
#include <vector>

#include "centracover/group.hpp"

namespace oracle {

using centracover::Group;
using ElementSet = std::set<int>;

ElementSet center(const Group& g);
ElementSet centralizer(const Group& g, int elem);

/// All distinct centralizers of noncentral elements, found by pairwise
/// comparison, in order of least representative.
std::vector<ElementSet> distinct_centralizers(const Group& g);

bool is_subset(const ElementSet& a, const ElementSet& b);
std::vector<ElementSet> maximal_members(const std::vector<ElementSet>& family);
std::vector<ElementSet> minimal_members(const std::vector<ElementSet>& family);

bool is_cover(const Group& g, const std::vector<ElementSet>& family);
bool is_irredundant_cover(const Group& g, const std::vector<ElementSet>& family);

ElementSet subgroup_generated(const Group& g, const ElementSet& gens);
bool is_abelian(const Group& g, const ElementSet& s);
int exponent(const Group& g, const ElementSet& s);

/// F-group by the definition: no strict containment among noncentral
/// element centralizers.
bool is_f_group(const Group& g);
bool is_ca_group(const Group& g);

std::optional<int> p_prime(int order);

}  // namespace oracle
