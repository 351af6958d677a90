#include "doctest.h"

#include <random>

#include "psigma/sparse_rank.hpp"

using namespace psigma;

namespace {

// Dense Gaussian elimination over Q.
std::size_t dense_rank(std::vector<std::vector<Rational>> a)
{
  std::size_t rank = 0;
  std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][c] == 0)
      ++pivot;
    if (pivot == a.size())
      continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0)
        continue;
      Rational f = a[r][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j)
        a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

SparseMatrix to_sparse(std::vector<std::vector<Rational>> const &a, std::size_t cols)
{
  SparseMatrix m(cols);
  for (auto const &row : a) {
    SparseRow s;
    for (std::size_t c = 0; c < cols; ++c)
      if (row[c] != 0)
        s.emplace_back(c, row[c]);
    m.add_row(std::move(s));
  }
  return m;
}

} // namespace

TEST_CASE("rows are normalized on insertion")
{
  SparseMatrix m(4);
  CHECK(m.add_row({{2, Rational(1)}, {0, Rational(3)}, {2, Rational(2)}}));
  CHECK(m.row(0) == SparseRow{{0, Rational(3)}, {2, Rational(3)}});
  CHECK_FALSE(m.add_row({{1, Rational(1)}, {1, Rational(-1)}}));
  CHECK_FALSE(m.add_row({}));
  CHECK(m.rows() == 1);
  CHECK(m.nonzeros() == 2);
}

TEST_CASE("small ranks")
{
  SparseMatrix m(3);
  m.add_row({{0, Rational(1)}, {1, Rational(1)}});
  m.add_row({{1, Rational(1)}, {2, Rational(1)}});
  m.add_row({{0, Rational(1)}, {2, Rational(-1)}});
  CHECK(exact_rank(m) == 2);
  CHECK(modular_rank(m, screen_primes[0]) == 2);
  m.add_row({{2, Rational(1, 2)}});
  CHECK(exact_rank(m) == 3);
  CHECK(exact_rank(SparseMatrix(5)) == 0);

  // 2 vanishes mod 2
  SparseMatrix two(1);
  two.add_row({{0, Rational(2)}});
  CHECK(exact_rank(two) == 1);
  CHECK(modular_rank(two, 2) == 0);
}

TEST_CASE("random matrices agree with dense elimination")
{
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> value(-2, 2);
  std::uniform_int_distribution<int> sparse(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = 1 + trial % 9, cols = 1 + (trial / 3) % 11;
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    for (auto &row : a)
      for (auto &x : row)
        x = sparse(rng) == 0 ? value(rng) : 0;
    // force some dependent rows
    if (rows > 2)
      for (std::size_t c = 0; c < cols; ++c)
        a[rows - 1][c] = a[0][c] - 3 * a[1][c];
    auto m = to_sparse(a, cols);
    std::size_t want = dense_rank(a);
    CHECK(exact_rank(m) == want);
    auto report = screened_rank(m);
    CHECK(report.exact == want);
    CHECK(report.modular[0] <= want);
    CHECK(report.modular_agreed == (report.modular[0] == want && report.modular[1] == want));
  }
}

TEST_CASE("elimination is deterministic")
{
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> value(-1, 1);
  std::vector<std::vector<Rational>> a(30, std::vector<Rational>(25));
  for (auto &row : a)
    for (auto &x : row)
      x = value(rng);
  auto m = to_sparse(a, 25);
  CHECK(exact_rank(m) == exact_rank(m));
  CHECK(exact_rank(m) == dense_rank(a));
}

TEST_CASE("echelon basis with column priority")
{
  // prefer pivots in column 2, then 1, then 0
  EchelonBasis basis(3, {2, 1, 0});
  CHECK(basis.insert({{0, Rational(1)}, {2, Rational(1)}}));
  CHECK(basis.pivot_columns() == std::vector<std::size_t>{2});
  CHECK_FALSE(basis.insert({{0, Rational(2)}, {2, Rational(2)}}));
  CHECK(basis.reduce({{2, Rational(1)}}) == SparseRow{{0, Rational(-1)}});
  CHECK(basis.insert({{1, Rational(1)}}));
  CHECK(basis.rank() == 2);
  CHECK(basis.reduce({{0, Rational(1)}, {1, Rational(5)}, {2, Rational(1)}}).empty());
}
