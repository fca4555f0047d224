#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "centracover/errors.hpp"

namespace centracover {

constexpr int kDefaultClosureCap = 20000;
constexpr std::uint64_t kDefaultSeed = 0xC0DEC0DEull;

/// Finite group on element indices 0..n-1 with an explicit multiplication
/// table. Element identity is the table index; labels are cosmetic.
/// Immutable after construction. The factories validate the Latin square
/// property, locate the two-sided identity and check associativity (all
/// triples for order <= 512, at least 10*n^2 seeded random triples above).
class Group {
 public:
  enum class AssocCheck { Full, Sampled, ByConstruction };

  /// Builds a group from an n x n multiplication table. `labels` may be
  /// empty (default labels g0..g{n-1} are generated) or have exactly n
  /// entries. Throws NotLatinSquare / NoIdentity / NotAssociative /
  /// BadIndex with the offending row or triple named in the message.
  static Group from_table(std::string name, std::vector<std::vector<int>> table,
                          std::vector<std::string> labels, std::string source);

  /// Builds the closure of permutation generators on 0..degree-1 by
  /// breadth-first products. Indices: identity first, then discovery
  /// order. Throws NotAPermutation or ClosureCapExceeded.
  static Group from_generators(std::string name, int degree,
                               const std::vector<std::vector<int>>& generators,
                               int closure_cap = kDefaultClosureCap,
                               std::string source = "permutation-closure");

  int order() const { return n_; }
  int identity() const { return identity_; }

  /// Checked product; throws BadIndex on out-of-range arguments.
  int mul(int a, int b) const;
  /// Unchecked product for hot loops; arguments must be valid indices.
  int at(int a, int b) const {
    return table_[static_cast<std::size_t>(a) * n_ + b];
  }

  /// Inverse: the unique b with a*b = identity. Throws BadIndex.
  int inv(int a) const;
  /// Least k >= 1 with a^k = identity. Throws BadIndex.
  int element_order(int a) const;

  bool commutes(int a, int b) const { return at(a, b) == at(b, a); }
  bool is_abelian() const { return abelian_; }

  const std::string& label(int a) const;
  std::optional<int> index_of_label(const std::string& label) const;

  const std::string& name() const { return name_; }
  const std::string& source() const { return source_; }
  AssocCheck associativity_check() const { return assoc_check_; }

 private:
  Group() = default;
  static Group from_table_impl(std::string name,
                               std::vector<std::vector<int>> table,
                               std::vector<std::string> labels,
                               std::string source, AssocCheck assoc_mode);
  void check_index(int a) const;
  void finish_construction();  // inverse table, abelian flag

  int n_ = 0;
  int identity_ = 0;
  std::vector<std::uint16_t> table_;    // flattened n x n
  std::vector<std::uint16_t> inverse_;  // per element
  std::vector<std::string> labels_;
  std::string name_;
  std::string source_;
  AssocCheck assoc_check_ = AssocCheck::Full;
  bool abelian_ = false;
};

std::string assoc_check_name(Group::AssocCheck mode);

/// Cycle notation on 1-based points, fixed points omitted; "()" for the
/// identity. Example: images {1,0,3,2} -> "(1 2)(3 4)".
std::string permutation_cycle_label(const std::vector<int>& images);

}  // namespace centracover
