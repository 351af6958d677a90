#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psigma/bigint.hpp"
#include "psigma/characters.hpp"
#include "psigma/group_action.hpp"
#include "psigma/partition.hpp"

namespace psigma {

struct MultiplicityEntry {
  StableName name;
  long long multiplicity = 0;
  BigInt padded_dim;
  /// Set when the summand's first plus row is not its largest, so the stable
  /// name would not pad back to it. Cannot happen for genuine partitions but
  /// is checked anyway.
  bool raw = false;

  bool operator==(MultiplicityEntry const &) const = default;
};

/// Multiplicities of the irreducibles V(name)_n in one representation,
/// positive entries only, sorted by name. `k` is the cohomological degree
/// (or the inducing rank r for Pieri outputs).
struct MultiplicityVector {
  GroupKind kind = GroupKind::symmetric;
  int n = 0;
  int k = 0;
  std::vector<MultiplicityEntry> entries;

  std::map<StableName, long long> stable() const;
  long long multiplicity(StableName const &name) const;
  BigInt total_dimension() const;
  /// Sum of squared multiplicities.
  long long norm_squared() const;

  bool operator==(MultiplicityVector const &) const = default;
};

/// Dimension of the irreducible labelled by `label` (full, unpadded form).
BigInt irreducible_dimension(GroupKind kind, DoublePartition const &label);

/// Decomposes any class function of the table's group. Throws
/// ConsistencyError on a negative or non-integral multiplicity.
MultiplicityVector decompose_class_function(CharacterTable const &table,
                                            ClassFunction const &chi, int k);

/// H^k(P Sigma_n; Q) decomposed for S_n or W_n. Checks the dimension identity
/// and <chi, chi> = sum of squared multiplicities.
MultiplicityVector decompose(int n, int k, GroupKind kind, TableStore &tables,
                             TraceMethod method = TraceMethod::automatic);

struct StabilityReport {
  GroupKind kind = GroupKind::symmetric;
  int k = 0;
  int n_min = 1;
  int n_max = 1;
  std::vector<MultiplicityVector> vectors;
  /// Smallest N with every vector from N on equal to the last one, only
  /// reported when at least two consecutive vectors agree at the top.
  std::optional<int> stable_from;
  /// 4k.
  int bound = 0;
  /// Scan stops below 4k, so the bound was not reached.
  bool provisional = false;
  /// Scan passes 4k but no stabilization at or below 4k was seen.
  bool violation = false;

  bool operator==(StabilityReport const &) const = default;
};

StabilityReport stability_scan(int k, GroupKind kind, int n_max, TableStore &tables);

/// Ind_{W_r x W_{n-r}}^{W_n} (V(lambda) (x) trivial) by adding n - r boxes to
/// lambda.plus, at most one per column, with lambda.minus unchanged. Each
/// summand has multiplicity 1. Throws ArgumentError when n < r.
MultiplicityVector pieri_induce(DoublePartition const &lambda, int n);
/// Pads `name` at r first; throws ArgumentError if that padding is invalid.
MultiplicityVector pieri_induce(StableName const &name, int r, int n);

/// Same induced representation, decomposed from its character computed by
/// class fusion.
MultiplicityVector induced_by_fusion(DoublePartition const &lambda, int n,
                                     TableStore &tables);

/// True iff pieri_induce(lambda, n) equals induced_by_fusion(lambda, n) and,
/// when n - 1 >= 2r, the stable-named Pieri output at n equals that at n - 1.
bool induction_character_check(DoublePartition const &lambda, int n, TableStore &tables);

/// S_n decomposition implied by a W_n decomposition, restricting each W_n
/// irreducible characterwise.
MultiplicityVector restrict_decomposition(MultiplicityVector const &wn,
                                          TableStore &tables);

} // namespace psigma
