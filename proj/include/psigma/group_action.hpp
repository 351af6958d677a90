#pragma once

#include <map>
#include <span>

#include "psigma/bigint.hpp"
#include "psigma/characters.hpp"
#include "psigma/class_table.hpp"
#include "psigma/forest.hpp"
#include "psigma/limits.hpp"
#include "psigma/signed_permutation.hpp"

namespace psigma {

struct SignedBasisVector {
  RootedForest forest;
  int coeff = 1;

  bool operator==(SignedBasisVector const &) const = default;
};

/// g . f in the forest basis. The forest part relabels every edge
/// i <- j to g(i) <- g(j). The coefficient is the sign of the permutation
/// that re-sorts the relabelled wedge factors by first index, times -1 for
/// each edge whose parent j is flipped by g (a flip at j negates every
/// factor with j as second index).
///
/// This is the single authoritative sign convention; the presentation
/// oracle checks it independently.
SignedBasisVector act(SignedPermutation const &g, RootedForest const &f);

/// Coefficient of f in g . f: 0 unless g fixes the forest, else +-1.
int fixed_coefficient(SignedPermutation const &g, std::span<int const> parent);

enum class TraceMethod {
  /// orbit construction from n = 8 up, full scan below
  automatic,
  /// enumerate every forest and filter
  full_scan,
  /// build only the forests whose parent map commutes with g
  orbit,
};

/// Trace of g on H^k: sum of fixed_coefficient over basis forests.
long long trace(SignedPermutation const &g, int k,
                TraceMethod method = TraceMethod::automatic);

/// Character of H^k(P Sigma_n) as a class function of `kind` (for S_n the
/// restriction to unsigned elements). Throws ResourceLimitError beyond
/// limits.max_n.
ClassFunction cohomology_character(GroupKind kind, int n, int k,
                                   Limits const &limits = {},
                                   TraceMethod method = TraceMethod::automatic,
                                   int threads = 1);

/// An involution w with w . f = -f. Flips a vertex with an odd number of
/// children when one exists; otherwise swaps two leaves with a common
/// parent. Throws ArgumentError when f has no edges.
SignedPermutation find_negating_involution(RootedForest const &f);

/// Multiplicity of the trivial representation of `kind` in H^k, by exact
/// inner product. Throws ConsistencyError if the result is not an integer.
BigInt trivial_multiplicity(int n, int k, GroupKind kind, Limits const &limits = {},
                            int threads = 1);

using ForestVector = std::map<RootedForest, BigInt>;

/// Sum of sigma . f over all sigma in S_n.
ForestVector symmetrize(RootedForest const &f);

/// g applied to a vector in the forest basis.
ForestVector act(SignedPermutation const &g, ForestVector const &v);

} // namespace psigma
