#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "psigma/bigint.hpp"

namespace psigma {

enum class GroupKind { symmetric, hyperoctahedral };

std::string_view to_string(GroupKind kind);
/// Accepts "Sn"/"symmetric" and "Wn"/"hyperoctahedral".
GroupKind parse_group_kind(std::string_view text);

/// Weakly decreasing positive parts. The empty partition is the partition
/// of 0.
class Partition {
public:
  Partition() = default;
  /// Throws ArgumentError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  /// Sorts and drops zero parts; negative parts are rejected.
  static Partition from_unsorted(std::vector<int> parts);

  std::vector<int> const &parts() const { return parts_; }
  int size() const { return size_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  /// Largest part, 0 for the empty partition.
  int first() const { return parts_.empty() ? 0 : parts_.front(); }

  /// m[l] = number of parts equal to l, for l in [0, size].
  std::vector<int> multiplicities() const;
  /// Multiset union, sorted.
  Partition merged(Partition const &other) const;
  Partition conjugate() const;
  /// Copy without the first row.
  Partition without_first_row() const;
  /// Copy with a new first row of length `row` prepended; row must be at
  /// least first().
  Partition with_first_row(int row) const;

  /// Centralizer order of the class with this cycle type in S_size:
  /// prod_l l^{m_l} m_l!.
  BigInt centralizer_order() const;
  /// Number of standard Young tableaux (hook length formula).
  BigInt dimension() const;

  /// "(3,1)"; the empty partition prints as "(0)".
  std::string str() const;
  static Partition parse(std::string_view text);

  bool operator==(Partition const &) const = default;
  /// Lexicographic on parts.
  std::strong_ordering operator<=>(Partition const &other) const;

private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream &operator<<(std::ostream &os, Partition const &p);

/// All partitions of n in reverse-lexicographic order, (n) first and
/// (1,...,1) last.
std::vector<Partition> enumerate_partitions(int n);

/// Ordered pair (plus, minus). Names signed cycle types and W_n irreducibles.
struct DoublePartition {
  Partition plus;
  Partition minus;

  int size() const { return plus.size() + minus.size(); }

  /// prod_l (2l)^{m_l(plus)} m_l(plus)! (2l)^{m_l(minus)} m_l(minus)!.
  BigInt centralizer_order() const;
  /// Cycle type of the image in S_n: plus and minus merged.
  Partition underlying() const { return plus.merged(minus); }

  std::string str() const;
  static DoublePartition parse(std::string_view text);

  bool operator==(DoublePartition const &) const = default;
  std::strong_ordering operator<=>(DoublePartition const &) const = default;
};

std::ostream &operator<<(std::ostream &os, DoublePartition const &p);

/// All double partitions of total size n: |plus| descending, then plus and
/// minus each in reverse-lexicographic order.
std::vector<DoublePartition> enumerate_double_partitions(int n);

/// n-independent name of an irreducible: the first row of the plus part is
/// left implicit. For S_n the minus part is always empty.
struct StableName {
  GroupKind kind = GroupKind::symmetric;
  DoublePartition body;

  /// Size of the body including the minus part.
  int weight() const { return body.size(); }
  /// Padding at n is valid iff n - weight() >= body.plus.first().
  bool valid_at(int n) const;
  /// Throws ArgumentError when padding is invalid at n.
  DoublePartition padded(int n) const;
  Partition padded_partition(int n) const;

  /// Strips the first plus row; never fails.
  static StableName of(GroupKind kind, DoublePartition const &full);
  static StableName of(Partition const &full);

  /// "V(1,1)" or "V((1),(1))".
  std::string str() const;
  static StableName parse(GroupKind kind, std::string_view text);

  bool operator==(StableName const &) const = default;
  std::strong_ordering operator<=>(StableName const &) const = default;
};

std::ostream &operator<<(std::ostream &os, StableName const &s);

} // namespace psigma
