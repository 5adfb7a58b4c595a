#pragma once

#include "holobound/exact.hpp"
#include "holobound/matrix_group.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace holobound {

inline constexpr std::size_t kMaxJordanOrder = 360;
inline constexpr std::size_t kMaxTableOrder = 2000;

/// A finite group given by its Cayley table on elements 0..n-1.
class FiniteGroupTable {
 public:
  /// Validates closure, identity, inverses and (unless the caller built the
  /// table from an associative operation) associativity; throws
  /// Error(domain, "table.*") on failure.
  static FiniteGroupTable from_table(std::vector<std::uint32_t> table, std::size_t order,
                                     std::vector<std::string> labels = {},
                                     bool check_associativity = true);

  std::size_t order() const { return order_; }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order_ + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::string& label(std::size_t a) const { return labels_[a]; }
  const std::vector<std::uint32_t>& table() const { return table_; }
  bool is_abelian() const;
  /// Order of element a.
  std::size_t element_order(std::size_t a) const;
  std::size_t exponent() const;
  /// Conjugacy classes, each sorted, ordered by smallest member.
  std::vector<std::vector<std::size_t>> conjugacy_classes() const;
  /// Subgroup generated by `gens`, sorted.
  std::vector<std::size_t> closure(const std::vector<std::size_t>& gens) const;

 private:
  FiniteGroupTable() = default;

  std::size_t order_ = 0;
  std::size_t identity_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::string> labels_;
};

/// Cayley table under the group's canonical element order.
FiniteGroupTable table_from_matrix_group(const MatrixGroup& g);

/// Permutation group on {0..n-1} generated by `gens` (each a list of images).
/// Elements are ordered lexicographically by image list; product a·b means
/// "apply b, then a".
FiniteGroupTable table_from_permutations(const std::vector<std::vector<unsigned>>& gens,
                                         std::size_t cap = kMaxJordanOrder);

struct JordanCertificate {
  std::vector<std::size_t> normal_subgroup;  // sorted element indices of N
  std::size_t group_order = 0;
  std::size_t subgroup_order = 0;
  std::size_t index = 0;        // |F/N|
  unsigned rank = 0;            // r of the ambient GL_r
  BigInt bound;                 // J(r)
  bool holds = false;           // index <= bound
  bool abelian_verified = false;
  bool normal_verified = false;
  std::size_t candidates = 0;   // maximal commuting class sets examined
};

/// Finds an abelian normal subgroup of minimal index by searching maximal
/// sets of pairwise-commuting conjugacy classes, then certifies the winner
/// by exhaustive commutation and conjugation checks.
JordanCertificate jordan_verify(const FiniteGroupTable& g, unsigned r, const BigInt& j_value,
                                std::size_t cap = kMaxJordanOrder);

bool is_abelian_subset(const FiniteGroupTable& g, const std::vector<std::size_t>& subset);
bool is_normal_subset(const FiniteGroupTable& g, const std::vector<std::size_t>& subset);

/// Small fixture groups by name: "s3", "d4", "q8", "a4", "s4", or
/// "sl2:<p>:<e>". Q8 is realized inside SL(2, F_3).
FiniteGroupTable named_group(const std::string& name);
/// Dimension of the natural faithful complex representation of a named group.
unsigned natural_dimension(const std::string& name);

}  // namespace holobound
