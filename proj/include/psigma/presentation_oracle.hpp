#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "psigma/bigint.hpp"
#include "psigma/forest.hpp"
#include "psigma/limits.hpp"
#include "psigma/signed_permutation.hpp"
#include "psigma/sparse_rank.hpp"

namespace psigma::oracle {

/// alpha*_{i,j}, i != j, 0-based. Generators are ordered lexicographically
/// on (i, j).
struct Generator {
  int i;
  int j;

  bool operator==(Generator const &) const = default;
  auto operator<=>(Generator const &) const = default;
};

/// Strictly increasing generators; an exterior monomial of degree size().
using Monomial = std::vector<Generator>;

/// Sorts the factors of a wedge product into generator order. Returns the
/// sign of the sorting permutation, or 0 when a generator repeats.
int sort_wedge(std::vector<Generator> &factors);

/// Every generator and degree-k monomial of the exterior algebra on n(n-1)
/// generators, with column lookup.
class MonomialBasis {
public:
  MonomialBasis(int n, int k);

  int rank() const { return n_; }
  int degree() const { return k_; }
  std::size_t size() const { return monomials_.size(); }
  Monomial const &operator[](std::size_t c) const { return monomials_[c]; }
  std::optional<std::size_t> column_of(Monomial const &m) const;
  /// Forest monomial: distinct first indices and no directed cycle.
  bool is_forest(std::size_t c) const { return forest_[c]; }
  RootedForest forest(std::size_t c) const;
  std::size_t column_of(RootedForest const &f) const;

private:
  int n_;
  int k_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t> columns_;
  std::vector<bool> forest_;
};

struct RelationMatrix {
  int n = 0;
  int k = 0;
  std::size_t square_relations = 0;
  std::size_t triangle_relations = 0;
  MonomialBasis columns;
  SparseMatrix matrix;
};

/// The degree-2 relations a_ij ^ a_ji and
/// a_kj ^ a_ji - a_kj ^ a_ki + a_ij ^ a_ki (ordered distinct i, j, k),
/// each wedged with every degree-(k-2) monomial. Rows that vanish are
/// dropped. Throws ArgumentError for k < 2 and ResourceLimitError past the
/// oracle caps.
RelationMatrix build_relation_matrix(int n, int k, Limits const &limits = {});

struct QuotientReport {
  std::size_t monomials = 0;
  RankReport relations;
  std::size_t quotient = 0;
};

/// dim of degree k of the presented algebra: binomial(n(n-1), k) minus the
/// rank of the relation matrix (exact, with a modular pre-screen).
QuotientReport quotient_rank_report(int n, int k, Limits const &limits = {});
std::size_t quotient_rank(int n, int k, Limits const &limits = {});

/// Forest monomials are independent modulo the relations and their number
/// equals quotient_rank(n, k).
bool verify_forest_basis(int n, int k, Limits const &limits = {});

using NormalForm = std::map<RootedForest, Rational>;

/// Degree-k part of the presented algebra with reduction to forest
/// coordinates. Eliminates the relation rows preferring non-forest pivot
/// columns, so reducing any monomial leaves a combination of forests.
class PresentedAlgebra {
public:
  PresentedAlgebra(int n, int k, Limits const &limits = {});

  int rank() const { return n_; }
  int degree() const { return k_; }
  MonomialBasis const &basis() const { return *basis_; }
  /// True when every pivot is a non-forest column and all non-forest
  /// columns are pivots, i.e. forests give a basis of the quotient.
  bool forests_complement_relations() const { return complement_; }

  NormalForm normal_form(SparseRow const &element) const;
  /// Normal form of a signed wedge of generators in any order.
  NormalForm normal_form(std::vector<Generator> factors, int coeff = 1) const;

private:
  int n_;
  int k_;
  std::optional<MonomialBasis> basis_;
  std::optional<EchelonBasis> echelon_;
  bool complement_ = false;
};

/// g written as a word in the flips rho_i and adjacent transpositions
/// tau_i. The flips act first, then the transpositions in listed order.
struct GeneratorWord {
  std::vector<int> flips;
  std::vector<int> transpositions;
};
GeneratorWord generator_word(SignedPermutation const &g);

/// g . w computed inside the presented algebra: the word for g is applied
/// one generator at a time using the action on degree-one classes
///   rho_i a_{j,k} = -a_{j,k} if k = i, else a_{j,k}
///   tau_i a_{j,k} = a_{s(j), s(k)}, s = (i i+1),
/// then the factors are sorted with their exterior sign and the result is
/// reduced modulo the relations.
NormalForm oracle_action(PresentedAlgebra const &algebra, SignedPermutation const &g,
                         WedgeWord const &w);

/// Whether the wedge of the given (i, j) factors lies in the relation ideal.
bool reduces_to_zero(PresentedAlgebra const &algebra,
                     std::vector<std::pair<int, int>> const &factors);

} // namespace psigma::oracle
