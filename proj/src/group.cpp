#include "centracover/group.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace centracover {

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back("g" + std::to_string(i));
  return out;
}

// (p*q)(x) = p(q(x)): apply q first.
std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[x] = p[q[x]];
  return r;
}

}  // namespace

std::string assoc_check_name(Group::AssocCheck mode) {
  switch (mode) {
    case Group::AssocCheck::Full: return "full";
    case Group::AssocCheck::Sampled: return "sampled";
    case Group::AssocCheck::ByConstruction: return "by-construction";
  }
  return "unknown";
}

std::string permutation_cycle_label(const std::vector<int>& images) {
  const int d = static_cast<int>(images.size());
  std::vector<bool> seen(d, false);
  std::ostringstream out;
  bool any = false;
  for (int start = 0; start < d; ++start) {
    if (seen[start] || images[start] == start) continue;
    any = true;
    out << '(';
    int p = start;
    bool first = true;
    while (!seen[p]) {
      seen[p] = true;
      if (!first) out << ' ';
      out << (p + 1);
      first = false;
      p = images[p];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

void Group::check_index(int a) const {
  if (a < 0 || a >= n_) {
    throw Error(Error::Code::BadIndex,
                "element index " + std::to_string(a) + " out of range 0.." +
                    std::to_string(n_ - 1));
  }
}

int Group::mul(int a, int b) const {
  check_index(a);
  check_index(b);
  return at(a, b);
}

int Group::inv(int a) const {
  check_index(a);
  return inverse_[a];
}

int Group::element_order(int a) const {
  check_index(a);
  int x = a;
  int k = 1;
  while (x != identity_) {
    x = at(x, a);
    ++k;
  }
  return k;
}

const std::string& Group::label(int a) const {
  check_index(a);
  return labels_[a];
}

std::optional<int> Group::index_of_label(const std::string& label) const {
  for (int i = 0; i < n_; ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

void Group::finish_construction() {
  inverse_.assign(n_, 0);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (at(a, b) == identity_) {
        inverse_[a] = static_cast<std::uint16_t>(b);
        break;
      }
    }
  }
  abelian_ = true;
  for (int a = 0; a < n_ && abelian_; ++a) {
    for (int b = a + 1; b < n_; ++b) {
      if (at(a, b) != at(b, a)) {
        abelian_ = false;
        break;
      }
    }
  }
}

Group Group::from_table(std::string name, std::vector<std::vector<int>> table,
                        std::vector<std::string> labels, std::string source) {
  return from_table_impl(std::move(name), std::move(table), std::move(labels),
                         std::move(source), AssocCheck::Full);
}

Group Group::from_table_impl(std::string name, std::vector<std::vector<int>> table,
                             std::vector<std::string> labels, std::string source,
                             AssocCheck assoc_mode) {
  const int n = static_cast<int>(table.size());
  if (n <= 0) throw Error(Error::Code::BadFormat, "empty multiplication table");
  if (n > 65535) {
    throw Error(Error::Code::BadFormat,
                "order " + std::to_string(n) + " exceeds supported maximum 65535");
  }

  Group g;
  g.n_ = n;
  g.table_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n) {
      throw Error(Error::Code::BadFormat,
                  "row " + std::to_string(i) + " has " +
                      std::to_string(table[i].size()) + " entries, expected " +
                      std::to_string(n));
    }
    for (int j = 0; j < n; ++j) {
      const int v = table[i][j];
      if (v < 0 || v >= n) {
        throw Error(Error::Code::BadIndex,
                    "table[" + std::to_string(i) + "][" + std::to_string(j) +
                        "] = " + std::to_string(v) + " out of range 0.." +
                        std::to_string(n - 1));
      }
      g.table_[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint16_t>(v);
    }
  }

  // Latin square: each row and column is a permutation of 0..n-1.
  std::vector<bool> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), false);
    for (int j = 0; j < n; ++j) {
      const int v = g.at(i, j);
      if (seen[v]) {
        throw Error(Error::Code::NotLatinSquare,
                    "row " + std::to_string(i) + " repeats value " +
                        std::to_string(v));
      }
      seen[v] = true;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), false);
    for (int i = 0; i < n; ++i) {
      const int v = g.at(i, j);
      if (seen[v]) {
        throw Error(Error::Code::NotLatinSquare,
                    "column " + std::to_string(j) + " repeats value " +
                        std::to_string(v));
      }
      seen[v] = true;
    }
  }

  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int j = 0; j < n; ++j) {
      if (g.at(e, j) != j || g.at(j, e) != j) {
        ok = false;
        break;
      }
    }
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) {
    throw Error(Error::Code::NoIdentity, "no two-sided identity element");
  }
  g.identity_ = identity;

  auto check_triple = [&](int a, int b, int c) {
    if (g.at(g.at(a, b), c) != g.at(a, g.at(b, c))) {
      throw Error(Error::Code::NotAssociative,
                  "(a*b)*c != a*(b*c) for a=" + std::to_string(a) +
                      " b=" + std::to_string(b) + " c=" + std::to_string(c));
    }
  };
  if (assoc_mode == AssocCheck::ByConstruction) {
    g.assoc_check_ = AssocCheck::ByConstruction;
  } else if (n <= 512) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check_triple(a, b, c);
    g.assoc_check_ = AssocCheck::Full;
  } else {
    // Sampled mode for large tables; seeded so runs are reproducible.
    std::mt19937_64 rng(kDefaultSeed);
    const std::uint64_t samples = 10ull * n * n;
    for (std::uint64_t s = 0; s < samples; ++s) {
      const int a = static_cast<int>(rng() % n);
      const int b = static_cast<int>(rng() % n);
      const int c = static_cast<int>(rng() % n);
      check_triple(a, b, c);
    }
    g.assoc_check_ = AssocCheck::Sampled;
  }

  if (labels.empty()) {
    g.labels_ = default_labels(n);
  } else {
    if (static_cast<int>(labels.size()) != n) {
      throw Error(Error::Code::BadFormat,
                  "expected " + std::to_string(n) + " labels, got " +
                      std::to_string(labels.size()));
    }
    g.labels_ = std::move(labels);
  }
  g.name_ = std::move(name);
  g.source_ = std::move(source);
  g.finish_construction();
  return g;
}

Group Group::from_generators(std::string name, int degree,
                             const std::vector<std::vector<int>>& generators,
                             int closure_cap, std::string source) {
  if (degree <= 0) {
    throw Error(Error::Code::BadFormat, "degree must be positive");
  }
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const auto& gen = generators[k];
    if (static_cast<int>(gen.size()) != degree) {
      throw Error(Error::Code::NotAPermutation,
                  "generator " + std::to_string(k) + " has " +
                      std::to_string(gen.size()) + " images, expected " +
                      std::to_string(degree));
    }
    std::vector<bool> hit(degree, false);
    for (int p = 0; p < degree; ++p) {
      const int v = gen[p];
      if (v < 0 || v >= degree) {
        throw Error(Error::Code::NotAPermutation,
                    "generator " + std::to_string(k) + ": image " +
                        std::to_string(v) + " out of range 0.." +
                        std::to_string(degree - 1));
      }
      if (hit[v]) {
        throw Error(Error::Code::NotAPermutation,
                    "generator " + std::to_string(k) + ": image " +
                        std::to_string(v) + " repeated");
      }
      hit[v] = true;
    }
  }

  std::vector<int> id(degree);
  for (int p = 0; p < degree; ++p) id[p] = p;

  std::vector<std::vector<int>> elems;
  std::map<std::vector<int>, int> index;
  elems.push_back(id);
  index.emplace(id, 0);
  // Breadth-first right products; every word in the generators is reached.
  for (std::size_t head = 0; head < elems.size(); ++head) {
    const std::vector<int> current = elems[head];
    for (const auto& gen : generators) {
      std::vector<int> next = compose(current, gen);
      if (index.emplace(next, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(next));
        if (static_cast<int>(elems.size()) > closure_cap) {
          throw Error(Error::Code::ClosureCapExceeded,
                      "permutation closure exceeded cap " +
                          std::to_string(closure_cap));
        }
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      table[i][j] = index.at(compose(elems[i], elems[j]));
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& perm : elems) labels.push_back(permutation_cycle_label(perm));

  // Composition tables are associative by construction; for large closures
  // the triple check is skipped and the mode records that. Small closures
  // still get the full check as a tripwire.
  const AssocCheck mode =
      n <= 512 ? AssocCheck::Full : AssocCheck::ByConstruction;
  return from_table_impl(std::move(name), std::move(table), std::move(labels),
                         std::move(source), mode);
}

}  // namespace centracover
