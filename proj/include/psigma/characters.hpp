#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "psigma/bigint.hpp"
#include "psigma/class_table.hpp"
#include "psigma/limits.hpp"
#include "psigma/partition.hpp"

namespace psigma {

/// Exact values indexed by the classes of a ConjClassTable, in table order.
struct ClassFunction {
  GroupKind kind = GroupKind::symmetric;
  int n = 0;
  std::vector<Rational> values;

  Rational const &operator[](std::size_t i) const { return values[i]; }
  bool operator==(ClassFunction const &) const = default;
};

/// <f, g> = sum_c f(c) g(c) / z_c. Characters here are real, so no
/// conjugation is needed.
Rational inner_product(ConjClassTable const &classes, ClassFunction const &f,
                       ClassFunction const &g);

/// chi_lambda(mu) by the Murnaghan-Nakayama rule. Memoized in a process-wide
/// store with atomic get-or-insert; safe to call from several threads.
/// Throws ArgumentError when |lambda| != |mu|.
long long mn_character(Partition const &lambda, Partition const &mu);

/// (-1)^{number of negative cycles}.
int epsilon_value(DoublePartition const &cls);

/// Calls visit(part1, part2, coefficient) for every way of splitting the
/// signed cycle type `cls` into a class of W_a and a class of W_{size-a},
/// each distinct pair once. coefficient = z_cls / (z_part1 * z_part2), the
/// number of W_a x W_b classes fusing into cls counted with their share of
/// its centralizer.
void for_each_class_splitting(
  DoublePartition const &cls, int a,
  std::function<void(DoublePartition const &, DoublePartition const &,
                     BigInt const &)> const &visit);

/// Character of V(lambda.plus, lambda.minus) at class `cls`, computed by
/// inducing chi_{plus} (pulled back to W_a) times chi_{minus} twisted by
/// epsilon (pulled back to W_b) from W_a x W_b.
long long wn_character(DoublePartition const &lambda, DoublePartition const &cls);

/// Irreducible characters of one group. Rows are in class-table label order
/// (the same order used for classes).
class CharacterTable {
public:
  CharacterTable(ConjClassTable classes, std::vector<DoublePartition> labels,
                 std::vector<std::vector<long long>> rows);

  GroupKind kind() const { return classes_.kind(); }
  int rank() const { return classes_.rank(); }
  ConjClassTable const &classes() const { return classes_; }
  std::size_t size() const { return labels_.size(); }

  std::vector<DoublePartition> const &labels() const { return labels_; }
  std::vector<long long> const &row(std::size_t i) const { return rows_[i]; }
  std::vector<std::vector<long long>> const &rows() const { return rows_; }
  std::size_t index_of(DoublePartition const &label) const;

  long long dimension(std::size_t i) const;
  ClassFunction character(std::size_t i) const;

  /// Empty optional when rows are orthonormal and columns orthogonal;
  /// otherwise a description of the first failure.
  std::optional<std::string> orthogonality_failure() const;

  bool operator==(CharacterTable const &other) const;

private:
  ConjClassTable classes_;
  std::vector<DoublePartition> labels_;
  std::vector<std::vector<long long>> rows_;
  std::map<DoublePartition, std::size_t> index_;
};

/// Builds, verifies (row orthonormality + column orthogonality) and returns
/// the table. Throws ConsistencyError if verification fails and
/// ResourceLimitError past limits.max_n.
CharacterTable character_table(GroupKind kind, int n, Limits const &limits = {},
                               int threads = 1);

/// Restriction of a W_n class function to S_n (all-positive classes).
ClassFunction restrict_to_symmetric(ClassFunction const &f,
                                    ConjClassTable const &wn_classes,
                                    ConjClassTable const &sn_classes);

/// Ind_{W_a x W_b}^{W_n} of phi1 (x) phi2, by class fusion.
ClassFunction induce_product(ConjClassTable const &target,
                             CharacterTable const &left, ClassFunction const &phi1,
                             CharacterTable const &right,
                             ClassFunction const &phi2);

namespace cache {

inline constexpr int format_version = 1;

/// Text serialization; header lists format version, kind, n and the class
/// order, followed by the integer matrix and a checksum line.
std::string serialize(CharacterTable const &table);
/// Throws ConsistencyError on any malformed, mismatched or corrupted input.
CharacterTable deserialize(std::string const &text);

std::filesystem::path path_for(std::filesystem::path const &dir, GroupKind kind,
                               int n);

/// Loads a cached table when present and valid, otherwise builds it and
/// (re)writes the cache. `dir` empty means no disk cache. `loaded` reports
/// whether the disk copy was used.
CharacterTable load_or_build(std::filesystem::path const &dir, GroupKind kind,
                             int n, Limits const &limits = {}, int threads = 1,
                             bool *loaded = nullptr);

} // namespace cache

/// Per-process table store in front of cache::load_or_build.
class TableStore {
public:
  explicit TableStore(std::filesystem::path cache_dir = {}, Limits limits = {},
                      int threads = 1);

  CharacterTable const &get(GroupKind kind, int n);
  ConjClassTable const &classes(GroupKind kind, int n) { return get(kind, n).classes(); }
  Limits const &limits() const { return limits_; }
  int threads() const { return threads_; }

private:
  std::filesystem::path dir_;
  Limits limits_;
  int threads_;
  std::map<std::pair<GroupKind, int>, std::unique_ptr<CharacterTable>> tables_;
};

} // namespace psigma
