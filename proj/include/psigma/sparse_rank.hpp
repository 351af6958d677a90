#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "psigma/bigint.hpp"

namespace psigma {

/// Entries sorted by column, no explicit zeros.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

class SparseMatrix {
public:
  explicit SparseMatrix(std::size_t cols = 0) : cols_(cols) {}

  /// Sorts the entries, merges duplicates and drops zeros. Returns false
  /// (and stores nothing) for a row that ends up empty.
  bool add_row(SparseRow row);

  std::size_t cols() const { return cols_; }
  std::size_t rows() const { return rows_.size(); }
  std::vector<SparseRow> const &data() const { return rows_; }
  SparseRow const &row(std::size_t i) const { return rows_[i]; }
  std::size_t nonzeros() const;

private:
  std::size_t cols_;
  std::vector<SparseRow> rows_;
};

/// Rank over Q by sparse elimination with Markowitz pivot selection
/// (minimize (row count - 1)(column count - 1), ties to the smallest
/// row then column index, so the pivot sequence is reproducible).
std::size_t exact_rank(SparseMatrix const &m);

/// Rank over Z/p using the same pivoting. Entries must be integers. A lower
/// value than exact_rank means p divides some pivot; it is never higher.
std::size_t modular_rank(SparseMatrix const &m, std::uint32_t prime);

struct RankReport {
  std::size_t exact = 0;
  std::size_t modular[2] = {0, 0};
  /// False when a modular pre-screen disagreed with the exact rank.
  bool modular_agreed = true;
};

inline constexpr std::uint32_t screen_primes[2] = {2147483629u, 1000000007u};

/// Modular pre-screen with two word-size primes; the exact rank is always
/// computed and is the value reported.
RankReport screened_rank(SparseMatrix const &m);

/// Row echelon basis built with a fixed column priority: each new row's pivot
/// is its nonzero column of smallest priority. Reducing a vector against it
/// leaves entries only in non-pivot columns.
class EchelonBasis {
public:
  /// priority[c] is the position of column c in the elimination order.
  EchelonBasis(std::size_t cols, std::vector<std::size_t> priority);

  /// Reduces then inserts; returns true when the row added a new pivot.
  bool insert(SparseRow const &row);
  SparseRow reduce(SparseRow const &row) const;

  std::size_t rank() const { return pivots_.size(); }
  std::vector<std::size_t> pivot_columns() const;

private:
  using Keyed = std::map<std::size_t, Rational>;
  Keyed keyed(SparseRow const &row) const;
  SparseRow unkeyed(Keyed const &v) const;
  void reduce_in_place(Keyed &v) const;

  std::size_t cols_;
  std::vector<std::size_t> priority_;
  std::vector<std::size_t> column_at_;
  // pivot priority position -> row keyed by priority position, pivot entry 1
  std::map<std::size_t, Keyed> pivots_;
};

} // namespace psigma
