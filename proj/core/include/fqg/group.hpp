#pragma once

#include <string>
#include <vector>

#include "fqg/linalg.hpp"

namespace fqg {

/// Multiplication table of a finite group: table[a][b] is the index of a·b.
class CayleyTable {
 public:
  /// Validates the Latin-square property, associativity, identity and
  /// inverses; throws InvalidGroupTable.
  CayleyTable(std::vector<std::vector<Index>> table, std::vector<std::string> labels = {});

  Index order() const { return static_cast<Index>(table_.size()); }
  Index identity() const { return identity_; }
  Index multiply(Index a, Index b) const { return table_[a][b]; }
  Index inverse(Index a) const { return inverse_[a]; }
  const std::vector<std::vector<Index>>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool is_abelian() const;

  friend bool operator==(const CayleyTable& a, const CayleyTable& b) { return a.table_ == b.table_; }

 private:
  std::vector<std::vector<Index>> table_;
  std::vector<std::string> labels_;
  Index identity_ = 0;
  std::vector<Index> inverse_;
};

/// ℤ/n with elements 0..n-1.
CayleyTable cyclic_group(Index n);
/// S₃ as permutations of {0,1,2} in lexicographic order, (στ)(x) = σ(τ(x)).
CayleyTable symmetric_group_s3();
/// "trivial", "z1".."z6", "s3". Throws UnknownPreset.
CayleyTable group_preset(const std::string& name);

/// All bijections fixing the identity and preserving the table, found by
/// backtracking; sorted lexicographically. perm[g] is the image of g.
std::vector<std::vector<Index>> enumerate_group_automorphisms(const CayleyTable& group);

}  // namespace fqg
