#pragma once

#include <map>
#include <vector>

#include "psigma/bigint.hpp"
#include "psigma/limits.hpp"
#include "psigma/partition.hpp"
#include "psigma/signed_permutation.hpp"

namespace psigma {

struct ConjClass {
  /// For S_n the minus part is empty.
  DoublePartition label;
  BigInt centralizer;
  BigInt size;
  SignedPermutation representative;
};

/// Conjugacy classes of S_n (by cycle type) or W_n (by signed cycle type).
/// S_n classes are in reverse-lexicographic order; W_n classes follow
/// enumerate_double_partitions.
class ConjClassTable {
public:
  ConjClassTable(GroupKind kind, int n);

  GroupKind kind() const { return kind_; }
  int rank() const { return n_; }
  BigInt const &group_order() const { return order_; }
  std::size_t size() const { return classes_.size(); }
  ConjClass const &operator[](std::size_t i) const { return classes_[i]; }
  std::vector<ConjClass> const &classes() const { return classes_; }

  /// Throws ArgumentError for labels not in the table.
  std::size_t index_of(DoublePartition const &label) const;
  std::size_t index_of(Partition const &label) const;
  /// Class of an arbitrary element (S_n tables require unsigned elements).
  std::size_t index_of(SignedPermutation const &g) const;

private:
  GroupKind kind_;
  int n_;
  BigInt order_;
  std::vector<ConjClass> classes_;
  std::map<DoublePartition, std::size_t> index_;
};

/// Throws ResourceLimitError when n exceeds limits.max_n.
ConjClassTable class_table(GroupKind kind, int n, Limits const &limits = {});

BigInt group_order(GroupKind kind, int n);

} // namespace psigma
