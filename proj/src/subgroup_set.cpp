#include "centracover/subgroup_set.hpp"

#include <numeric>
#include <string>

namespace centracover {

ElementMask empty_mask(int n) { return ElementMask(static_cast<std::size_t>(n)); }

ElementMask full_mask(int n) {
  ElementMask m(static_cast<std::size_t>(n));
  m.set();
  return m;
}

std::vector<int> mask_elements(const ElementMask& mask) {
  std::vector<int> out;
  out.reserve(mask.count());
  for (auto i = mask.find_first(); i != ElementMask::npos; i = mask.find_next(i)) {
    out.push_back(static_cast<int>(i));
  }
  return out;
}

SubgroupSet::SubgroupSet(const Group& g, ElementMask members)
    : members_(std::move(members)), order_(0) {
  const int n = g.order();
  if (static_cast<int>(members_.size()) != n) {
    throw Error(Error::Code::NotASubgroup,
                "mask size " + std::to_string(members_.size()) +
                    " does not match group order " + std::to_string(n));
  }
  if (!members_.test(g.identity())) {
    throw Error(Error::Code::NotASubgroup, "set does not contain the identity");
  }
  const std::vector<int> elems = mask_elements(members_);
  for (int a : elems) {
    if (!members_.test(g.inv(a))) {
      throw Error(Error::Code::NotASubgroup,
                  "not closed under inverse: element " + std::to_string(a));
    }
    for (int b : elems) {
      if (!members_.test(g.at(a, b))) {
        throw Error(Error::Code::NotASubgroup,
                    "not closed under products: " + std::to_string(a) + "*" +
                        std::to_string(b));
      }
    }
  }
  order_ = static_cast<int>(members_.count());
  if (n % order_ != 0) {
    throw Error(Error::Code::NotASubgroup,
                "order " + std::to_string(order_) +
                    " does not divide group order " + std::to_string(n));
  }
}

SubgroupSet SubgroupSet::trivial(const Group& g) {
  ElementMask m = empty_mask(g.order());
  m.set(g.identity());
  return SubgroupSet(g, std::move(m));
}

SubgroupSet SubgroupSet::whole(const Group& g) {
  return SubgroupSet(g, full_mask(g.order()));
}

ElementMask centralizer_mask(const Group& g, int elem) {
  const int n = g.order();
  ElementMask m(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    if (g.at(x, elem) == g.at(elem, x)) m.set(x);
  }
  return m;
}

SubgroupSet center(const Group& g) {
  const int n = g.order();
  ElementMask m(static_cast<std::size_t>(n));
  for (int z = 0; z < n; ++z) {
    bool central = true;
    for (int x = 0; x < n; ++x) {
      if (g.at(z, x) != g.at(x, z)) {
        central = false;
        break;
      }
    }
    if (central) m.set(z);
  }
  return SubgroupSet(g, std::move(m));
}

SubgroupSet centralizer(const Group& g, int elem) {
  if (elem < 0 || elem >= g.order()) {
    throw Error(Error::Code::BadIndex,
                "element index " + std::to_string(elem) + " out of range");
  }
  return SubgroupSet(g, centralizer_mask(g, elem));
}

SubgroupSet centralizer_of_set(const Group& g, const ElementMask& s) {
  ElementMask m = full_mask(g.order());
  for (auto i = s.find_first(); i != ElementMask::npos; i = s.find_next(i)) {
    m &= centralizer_mask(g, static_cast<int>(i));
  }
  return SubgroupSet(g, std::move(m));
}

SubgroupSet centralizer_of_set(const Group& g, const SubgroupSet& s) {
  return centralizer_of_set(g, s.members());
}

SubgroupSet generated_subgroup(const Group& g, const std::vector<int>& gens) {
  const int n = g.order();
  ElementMask m(static_cast<std::size_t>(n));
  m.set(g.identity());
  std::vector<int> worklist{g.identity()};
  // Right products by generators reach every word; inverses are powers.
  for (std::size_t head = 0; head < worklist.size(); ++head) {
    const int x = worklist[head];
    for (int gen : gens) {
      if (gen < 0 || gen >= n) {
        throw Error(Error::Code::BadIndex,
                    "generator index " + std::to_string(gen) + " out of range");
      }
      const int y = g.at(x, gen);
      if (!m.test(y)) {
        m.set(y);
        worklist.push_back(y);
      }
    }
  }
  return SubgroupSet(g, std::move(m));
}

SubgroupSet generated_subgroup(const Group& g, const ElementMask& gens) {
  return generated_subgroup(g, mask_elements(gens));
}

bool is_abelian_subgroup(const Group& g, const SubgroupSet& s) {
  const std::vector<int> elems = s.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (!g.commutes(elems[i], elems[j])) return false;
    }
  }
  return true;
}

int subgroup_exponent(const Group& g, const SubgroupSet& s) {
  long long e = 1;
  for (int x : s.elements()) {
    e = std::lcm<long long>(e, g.element_order(x));
  }
  return static_cast<int>(e);
}

std::optional<int> p_group_prime(const Group& g) {
  int n = g.order();
  if (n <= 1) return std::nullopt;
  int p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = n;  // n itself prime
  while (n % p == 0) n /= p;
  if (n == 1) return p;
  return std::nullopt;
}

}  // namespace centracover
