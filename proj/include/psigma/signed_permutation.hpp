#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "psigma/partition.hpp"

namespace psigma {

/// Element of W_n = (Z/2)^n x| S_n, acting on {+-1..+-n} by
/// g(i) = signs[i] * perm[i]. Vertices are 0-based.
///
/// Composition is that of maps, (g * h)(x) = g(h(x)):
///   (g*h).perm[i]  = g.perm[h.perm[i]]
///   (g*h).signs[i] = h.signs[i] * g.signs[h.perm[i]]
/// so the sign flips of an element are applied before its relabelling.
class SignedPermutation {
public:
  SignedPermutation() = default;
  /// Throws ArgumentError unless perm is a bijection and signs are +-1.
  SignedPermutation(std::vector<std::int8_t> signs, std::vector<int> perm);

  static SignedPermutation identity(int n);
  /// Unsigned permutation.
  static SignedPermutation from_perm(std::vector<int> perm);
  /// Flip at vertex i (rho_{i+1} in 1-based notation).
  static SignedPermutation flip(int n, int i);
  /// Exchanges vertices i and i+1 (tau_{i+1} in 1-based notation).
  static SignedPermutation adjacent(int n, int i);
  static SignedPermutation transposition(int n, int p, int q);
  static SignedPermutation random(int n, std::mt19937_64 &rng);
  static SignedPermutation random_unsigned(int n, std::mt19937_64 &rng);

  int rank() const { return static_cast<int>(perm_.size()); }
  int perm(int i) const { return perm_[static_cast<std::size_t>(i)]; }
  int sign(int i) const { return signs_[static_cast<std::size_t>(i)]; }
  std::vector<int> const &perm() const { return perm_; }
  std::vector<std::int8_t> const &signs() const { return signs_; }
  bool unsigned_perm() const;

  SignedPermutation operator*(SignedPermutation const &rhs) const;
  SignedPermutation inverse() const;

  std::string str() const;

  bool operator==(SignedPermutation const &) const = default;

private:
  std::vector<std::int8_t> signs_;
  std::vector<int> perm_;
};

/// Positive cycles (sign product +1) go to plus, negative ones to minus.
DoublePartition signed_cycle_type(SignedPermutation const &g);

/// Cycle type of the permutation part.
Partition cycle_type(SignedPermutation const &g);

/// Canonical class representative: cycles on consecutive vertices, positive
/// cycles first, each negative cycle flipping only its smallest vertex.
SignedPermutation class_representative(DoublePartition const &type);

} // namespace psigma
