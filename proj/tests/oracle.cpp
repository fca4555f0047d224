#include "oracle.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

ElementSet center(const Group& g) {
  ElementSet out;
  for (int z = 0; z < g.order(); ++z) {
    bool ok = true;
    for (int x = 0; x < g.order(); ++x) {
      if (g.at(z, x) != g.at(x, z)) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(z);
  }
  return out;
}

ElementSet centralizer(const Group& g, int elem) {
  ElementSet out;
  for (int x = 0; x < g.order(); ++x) {
    if (g.at(x, elem) == g.at(elem, x)) out.insert(x);
  }
  return out;
}

std::vector<ElementSet> distinct_centralizers(const Group& g) {
  const ElementSet zg = center(g);
  std::vector<ElementSet> out;
  for (int e = 0; e < g.order(); ++e) {
    if (zg.count(e)) continue;
    const ElementSet c = centralizer(g, e);
    bool known = false;
    for (const ElementSet& seen : out) {
      if (seen == c) {
        known = true;
        break;
      }
    }
    if (!known) out.push_back(c);
  }
  return out;
}

bool is_subset(const ElementSet& a, const ElementSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<ElementSet> maximal_members(const std::vector<ElementSet>& family) {
  std::vector<ElementSet> out;
  for (const ElementSet& c : family) {
    bool maximal = true;
    for (const ElementSet& other : family) {
      if (other != c && is_subset(c, other)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(c);
  }
  return out;
}

std::vector<ElementSet> minimal_members(const std::vector<ElementSet>& family) {
  std::vector<ElementSet> out;
  for (const ElementSet& c : family) {
    bool minimal = true;
    for (const ElementSet& other : family) {
      if (other != c && is_subset(other, c)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(c);
  }
  return out;
}

bool is_cover(const Group& g, const std::vector<ElementSet>& family) {
  for (int x = 0; x < g.order(); ++x) {
    bool covered = false;
    for (const ElementSet& s : family) {
      if (s.count(x)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

bool is_irredundant_cover(const Group& g, const std::vector<ElementSet>& family) {
  if (!is_cover(g, family)) return false;
  for (std::size_t drop = 0; drop < family.size(); ++drop) {
    std::vector<ElementSet> rest;
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (i != drop) rest.push_back(family[i]);
    }
    if (is_cover(g, rest)) return false;
  }
  return true;
}

ElementSet subgroup_generated(const Group& g, const ElementSet& gens) {
  ElementSet out{g.identity()};
  bool grew = true;
  while (grew) {
    grew = false;
    ElementSet next = out;
    for (int a : out) {
      for (int b : gens) {
        next.insert(g.at(a, b));
        next.insert(g.at(b, a));
      }
      for (int b : out) next.insert(g.at(a, b));
    }
    if (next != out) {
      out = next;
      grew = true;
    }
  }
  return out;
}

bool is_abelian(const Group& g, const ElementSet& s) {
  for (int a : s) {
    for (int b : s) {
      if (g.at(a, b) != g.at(b, a)) return false;
    }
  }
  return true;
}

int exponent(const Group& g, const ElementSet& s) {
  long long e = 1;
  for (int x : s) e = std::lcm<long long>(e, g.element_order(x));
  return static_cast<int>(e);
}

bool is_f_group(const Group& g) {
  const ElementSet zg = center(g);
  for (int x = 0; x < g.order(); ++x) {
    if (zg.count(x)) continue;
    const ElementSet cx = centralizer(g, x);
    for (int y = 0; y < g.order(); ++y) {
      if (zg.count(y)) continue;
      const ElementSet cy = centralizer(g, y);
      if (is_subset(cx, cy) && cx != cy) return false;
    }
  }
  return true;
}

bool is_ca_group(const Group& g) {
  const ElementSet zg = center(g);
  for (int x = 0; x < g.order(); ++x) {
    if (zg.count(x)) continue;
    if (!is_abelian(g, centralizer(g, x))) return false;
  }
  return true;
}

std::optional<int> p_prime(int order) {
  if (order <= 1) return std::nullopt;
  int p = 2;
  while (p * p <= order && order % p != 0) ++p;
  if (order % p != 0) p = order;
  while (order % p == 0) order /= p;
  if (order == 1) return p;
  return std::nullopt;
}

}  // namespace oracle
