#pragma once

#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <vector>

#include "centracover/group.hpp"

namespace centracover {

/// Element sets are bitmasks over the parent group's element indices.
using ElementMask = boost::dynamic_bitset<>;

ElementMask empty_mask(int n);
ElementMask full_mask(int n);
std::vector<int> mask_elements(const ElementMask& mask);

/// A validated subgroup given by its membership bitmask. Every constructor
/// enforces: contains the identity, closed under products and inverses,
/// and the order divides the parent group order.
class SubgroupSet {
 public:
  SubgroupSet(const Group& g, ElementMask members);

  static SubgroupSet trivial(const Group& g);
  static SubgroupSet whole(const Group& g);

  const ElementMask& members() const { return members_; }
  int order() const { return order_; }
  bool contains(int e) const { return members_.test(e); }
  bool subset_of(const SubgroupSet& other) const {
    return members_.is_subset_of(other.members_);
  }
  bool proper_subset_of(const SubgroupSet& other) const {
    return members_.is_proper_subset_of(other.members_);
  }
  std::vector<int> elements() const { return mask_elements(members_); }

  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) {
    return a.members_ == b.members_;
  }
  friend bool operator!=(const SubgroupSet& a, const SubgroupSet& b) {
    return !(a == b);
  }

 private:
  ElementMask members_;
  int order_;
};

/// Raw centralizer bitmask of a single element; no SubgroupSet validation.
ElementMask centralizer_mask(const Group& g, int elem);

/// Z(G): everything that commutes with every element.
SubgroupSet center(const Group& g);

/// C_G(g). Central g is allowed and yields the whole group.
SubgroupSet centralizer(const Group& g, int elem);

/// Intersection of centralizers over all members of `s`; the whole group
/// when `s` is empty.
SubgroupSet centralizer_of_set(const Group& g, const ElementMask& s);
SubgroupSet centralizer_of_set(const Group& g, const SubgroupSet& s);

/// Least subgroup containing the given elements (closure under products;
/// inverses follow in a finite group).
SubgroupSet generated_subgroup(const Group& g, const std::vector<int>& gens);
SubgroupSet generated_subgroup(const Group& g, const ElementMask& gens);

bool is_abelian_subgroup(const Group& g, const SubgroupSet& s);

/// lcm of the orders of the members.
int subgroup_exponent(const Group& g, const SubgroupSet& s);

/// The prime p when |G| is a power of p and |G| > 1, otherwise absent.
std::optional<int> p_group_prime(const Group& g);

}  // namespace centracover
