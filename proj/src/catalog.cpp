#include "centracover/catalog.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "centracover/subgroup_set.hpp"

namespace centracover {

namespace {

std::string rotation_label(int i) {
  if (i == 0) return "e";
  if (i == 1) return "r";
  return "r" + std::to_string(i);
}

std::string reflection_label(int i) {
  if (i == 0) return "s";
  if (i == 1) return "rs";
  return "r" + std::to_string(i) + "s";
}

}  // namespace

Group cyclic_group(int n, std::string name, std::string source) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    labels.push_back(i == 0 ? "e" : (i == 1 ? "c" : "c" + std::to_string(i)));
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  if (name.empty()) name = "c" + std::to_string(n);
  if (source.empty()) source = "catalog:" + name;
  return Group::from_table(std::move(name), std::move(table), std::move(labels),
                           std::move(source));
}

Group dihedral_group(int rotations, std::string name, std::string source) {
  const int n = 2 * rotations;
  // Index i < rotations: r^i. Index rotations + i: r^i s.
  auto mul = [rotations](int x, int y) {
    const bool xr = x < rotations;
    const bool yr = y < rotations;
    const int xi = xr ? x : x - rotations;
    const int yi = yr ? y : y - rotations;
    if (xr && yr) return (xi + yi) % rotations;
    if (xr && !yr) return rotations + (xi + yi) % rotations;
    if (!xr && yr) return rotations + ((xi - yi) % rotations + rotations) % rotations;
    return ((xi - yi) % rotations + rotations) % rotations;
  };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    labels.push_back(i < rotations ? rotation_label(i)
                                   : reflection_label(i - rotations));
    for (int j = 0; j < n; ++j) table[i][j] = mul(i, j);
  }
  if (name.empty()) name = "d" + std::to_string(n);
  if (source.empty()) source = "catalog:" + name;
  return Group::from_table(std::move(name), std::move(table), std::move(labels),
                           std::move(source));
}

Group quaternion_group(std::string name, std::string source) {
  // Element 2u + (sign < 0): 1, -1, i, -i, j, -j, k, -k.
  // Unit products for e, i, j, k with result sign.
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{+1, +1, +1, +1},
                                 {+1, -1, +1, -1},
                                 {+1, -1, -1, +1},
                                 {+1, +1, -1, -1}};
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int ux = x / 2, sx = x % 2 ? -1 : +1;
      const int uy = y / 2, sy = y % 2 ? -1 : +1;
      const int uz = unit[ux][uy];
      const int sz = sx * sy * sign[ux][uy];
      table[x][y] = 2 * uz + (sz < 0 ? 1 : 0);
    }
  }
  std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  if (source.empty()) source = "catalog:" + name;
  return Group::from_table(std::move(name), std::move(table), std::move(labels),
                           std::move(source));
}

Group heisenberg_group(int p, std::string name, std::string source) {
  const int n = p * p * p;
  auto idx = [p](int a, int b, int c) { return (a * p + b) * p + c; };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      for (int c = 0; c < p; ++c) {
        labels[idx(a, b, c)] = "(" + std::to_string(a) + "," + std::to_string(b) +
                               "," + std::to_string(c) + ")";
        for (int a2 = 0; a2 < p; ++a2) {
          for (int b2 = 0; b2 < p; ++b2) {
            for (int c2 = 0; c2 < p; ++c2) {
              table[idx(a, b, c)][idx(a2, b2, c2)] =
                  idx((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
            }
          }
        }
      }
    }
  }
  if (name.empty()) name = "heis" + std::to_string(n);
  if (source.empty()) source = "catalog:" + name;
  return Group::from_table(std::move(name), std::move(table), std::move(labels),
                           std::move(source));
}

Group special_linear_2_3(std::string name, std::string source) {
  // All 2x2 matrices over F_3 with determinant 1, in lexicographic
  // (a,b,c,d) order.
  struct M {
    int a, b, c, d;
  };
  std::vector<M> mats;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          if (((a * d - b * c) % 3 + 3) % 3 == 1) mats.push_back({a, b, c, d});
  const int n = static_cast<int>(mats.size());
  assert(n == 24);
  auto find = [&](int a, int b, int c, int d) {
    for (int i = 0; i < n; ++i) {
      if (mats[i].a == a && mats[i].b == b && mats[i].c == c && mats[i].d == d)
        return i;
    }
    return -1;
  };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    const M& x = mats[i];
    labels[i] = "[" + std::to_string(x.a) + " " + std::to_string(x.b) + ";" +
                std::to_string(x.c) + " " + std::to_string(x.d) + "]";
    for (int j = 0; j < n; ++j) {
      const M& y = mats[j];
      table[i][j] = find((x.a * y.a + x.b * y.c) % 3, (x.a * y.b + x.b * y.d) % 3,
                         (x.c * y.a + x.d * y.c) % 3, (x.c * y.b + x.d * y.d) % 3);
    }
  }
  if (source.empty()) source = "catalog:" + name;
  return Group::from_table(std::move(name), std::move(table), std::move(labels),
                           std::move(source));
}

Group direct_product(const Group& a, const Group& b, std::string name,
                     std::string source) {
  const int n = a.order() * b.order();
  auto idx = [&](int x, int y) { return x * b.order() + y; };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int x1 = 0; x1 < a.order(); ++x1) {
    for (int y1 = 0; y1 < b.order(); ++y1) {
      labels[idx(x1, y1)] = "(" + a.label(x1) + "," + b.label(y1) + ")";
      for (int x2 = 0; x2 < a.order(); ++x2) {
        for (int y2 = 0; y2 < b.order(); ++y2) {
          table[idx(x1, y1)][idx(x2, y2)] = idx(a.at(x1, x2), b.at(y1, y2));
        }
      }
    }
  }
  if (name.empty()) name = a.name() + "x" + b.name();
  if (source.empty()) source = "catalog:" + name;
  return Group::from_table(std::move(name), std::move(table), std::move(labels),
                           std::move(source));
}

Group central_product(const Group& a, const Group& b, int za, int zb,
                      std::string name, std::string source) {
  auto require_central = [](const Group& g, int z, const char* which) {
    if (z < 0 || z >= g.order()) {
      throw Error(Error::Code::BadIndex,
                  std::string(which) + " element index out of range");
    }
    for (int x = 0; x < g.order(); ++x) {
      if (!g.commutes(x, z)) {
        throw Error(Error::Code::NotCentral,
                    std::string(which) + " element " + g.label(z) +
                        " is not central");
      }
    }
  };
  require_central(a, za, "left");
  require_central(b, zb, "right");
  const int k = a.element_order(za);
  if (k != b.element_order(zb)) {
    throw Error(Error::Code::OrderMismatch,
                "central elements have orders " + std::to_string(k) + " and " +
                    std::to_string(b.element_order(zb)));
  }

  // Cosets of N = <(za, zb^-1)> inside A x B, canonical rep = least pair.
  const int pairs = a.order() * b.order();
  auto pair_idx = [&](int x, int y) { return x * b.order() + y; };
  const int zb_inv = b.inv(zb);
  std::vector<int> canon(pairs);
  for (int x = 0; x < a.order(); ++x) {
    for (int y = 0; y < b.order(); ++y) {
      int best = pair_idx(x, y);
      int cx = x, cy = y;
      for (int t = 1; t < k; ++t) {
        cx = a.at(cx, za);
        cy = b.at(cy, zb_inv);
        best = std::min(best, pair_idx(cx, cy));
      }
      canon[pair_idx(x, y)] = best;
    }
  }
  std::vector<int> rep_of;          // coset index -> canonical pair
  std::map<int, int> coset_of;      // canonical pair -> coset index
  for (int p = 0; p < pairs; ++p) {
    if (canon[p] == p) {
      coset_of[p] = static_cast<int>(rep_of.size());
      rep_of.push_back(p);
    }
  }
  const int n = static_cast<int>(rep_of.size());
  assert(n * k == pairs);

  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    const int x1 = rep_of[i] / b.order();
    const int y1 = rep_of[i] % b.order();
    labels[i] = "(" + a.label(x1) + "," + b.label(y1) + ")";
    for (int j = 0; j < n; ++j) {
      const int x2 = rep_of[j] / b.order();
      const int y2 = rep_of[j] % b.order();
      table[i][j] = coset_of.at(canon[pair_idx(a.at(x1, x2), b.at(y1, y2))]);
    }
  }
  if (name.empty()) name = a.name() + "*" + b.name();
  if (source.empty()) source = "catalog:" + name;
  return Group::from_table(std::move(name), std::move(table), std::move(labels),
                           std::move(source));
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "s3",     "s4",        "a4",         "a5",     "s5",      "d8",
      "q8",     "d16",       "d8xC2",      "d8xd8",  "sl2_3",   "frob21",
      "heis27", "es32_plus", "es32_minus", "heis125"};
  return names;
}

bool catalog_has(const std::string& name) {
  const auto& names = catalog_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

Group catalog_build(const std::string& name) {
  auto perms = [&](int degree, std::vector<std::vector<int>> gens) {
    return Group::from_generators(name, degree, gens, kDefaultClosureCap,
                                  "catalog:" + name);
  };
  if (name == "s3") return perms(3, {{1, 2, 0}, {1, 0, 2}});
  if (name == "s4") return perms(4, {{1, 2, 3, 0}, {1, 0, 2, 3}});
  if (name == "a4") return perms(4, {{1, 2, 0, 3}, {0, 2, 3, 1}});
  if (name == "a5") return perms(5, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}});
  if (name == "s5") return perms(5, {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}});
  if (name == "d8") return dihedral_group(4, name);
  if (name == "q8") return quaternion_group(name);
  if (name == "d16") return dihedral_group(8, name);
  if (name == "d8xC2") {
    return direct_product(dihedral_group(4), cyclic_group(2), name,
                          "catalog:" + name);
  }
  if (name == "d8xd8") {
    return direct_product(dihedral_group(4), dihedral_group(4), name,
                          "catalog:" + name);
  }
  if (name == "sl2_3") return special_linear_2_3(name);
  if (name == "frob21") {
    // C7 : C3 with the cube automorphism x -> x^2 on the 7-cycle.
    return perms(7, {{1, 2, 3, 4, 5, 6, 0}, {0, 2, 4, 6, 1, 3, 5}});
  }
  if (name == "heis27") return heisenberg_group(3, name);
  if (name == "heis125") return heisenberg_group(5, name);
  if (name == "es32_plus" || name == "es32_minus") {
    Group d8 = dihedral_group(4);
    const int r2 = *d8.index_of_label("r2");
    if (name == "es32_plus") {
      return central_product(d8, dihedral_group(4), r2, r2, name,
                             "catalog:" + name);
    }
    Group q8 = quaternion_group();
    const int minus_one = *q8.index_of_label("-1");
    return central_product(d8, q8, r2, minus_one, name, "catalog:" + name);
  }
  throw Error(Error::Code::UnknownName, "unknown catalog group: " + name);
}

}  // namespace centracover
