#include "psigma/sparse_rank.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "psigma/errors.hpp"

namespace psigma {

bool SparseMatrix::add_row(SparseRow row)
{
  std::sort(row.begin(), row.end(),
            [](auto const &a, auto const &b) { return a.first < b.first; });
  SparseRow merged;
  for (auto &[col, value] : row) {
    if (col >= cols_)
      throw ArgumentError("sparse matrix: column out of range");
    if (!merged.empty() && merged.back().first == col)
      merged.back().second += value;
    else
      merged.emplace_back(col, std::move(value));
  }
  std::erase_if(merged, [](auto const &e) { return e.second == 0; });
  if (merged.empty())
    return false;
  rows_.push_back(std::move(merged));
  return true;
}

std::size_t SparseMatrix::nonzeros() const
{
  std::size_t total = 0;
  for (auto const &r : rows_)
    total += r.size();
  return total;
}

namespace {

struct ModP {
  std::uint64_t v = 0;
  std::uint64_t p = 2;

  static std::uint64_t inv(std::uint64_t a, std::uint64_t p)
  {
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
      if (e & 1)
        result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  }
};

struct RationalField {
  using Value = Rational;
  bool zero(Value const &a) const { return a == 0; }
  // row_target -= factor * row_pivot, factor = target / pivot
  Value factor(Value const &target, Value const &pivot) const { return target / pivot; }
  Value sub_mul(Value const &a, Value const &f, Value const &b) const { return a - f * b; }
};

struct PrimeField {
  using Value = std::uint64_t;
  std::uint64_t p;
  bool zero(Value a) const { return a == 0; }
  Value factor(Value target, Value pivot) const { return target * ModP::inv(pivot, p) % p; }
  Value sub_mul(Value a, Value f, Value b) const { return (a + p - f * b % p) % p; }
};

template <typename Field>
std::size_t markowitz_rank(std::size_t cols,
                           std::vector<std::vector<std::pair<std::size_t, typename Field::Value>>> rows,
                           Field const &field)
{
  using Value = typename Field::Value;
  using Row = std::vector<std::pair<std::size_t, Value>>;

  std::vector<std::set<std::size_t>> col_rows(cols);
  std::set<std::size_t> active;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty())
      continue;
    active.insert(r);
    for (auto const &e : rows[r])
      col_rows[e.first].insert(r);
  }

  std::size_t rank = 0;
  while (!active.empty()) {
    std::size_t best_row = 0, best_col = 0;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t r : active) {
      std::size_t rc = rows[r].size() - 1;
      for (auto const &e : rows[r]) {
        std::size_t cost = rc * (col_rows[e.first].size() - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best_row = r;
          best_col = e.first;
        }
      }
      if (best_cost == 0)
        break;
    }

    Row pivot_row = rows[best_row];
    Value pivot_value{};
    for (auto const &e : pivot_row)
      if (e.first == best_col)
        pivot_value = e.second;

    active.erase(best_row);
    for (auto const &e : pivot_row)
      col_rows[e.first].erase(best_row);
    rows[best_row].clear();
    ++rank;

    std::vector<std::size_t> targets(col_rows[best_col].begin(), col_rows[best_col].end());
    for (std::size_t t : targets) {
      Row &target = rows[t];
      Value target_value{};
      for (auto const &e : target)
        if (e.first == best_col)
          target_value = e.second;
      Value f = field.factor(target_value, pivot_value);

      for (auto const &e : target)
        col_rows[e.first].erase(t);
      Row merged;
      merged.reserve(target.size() + pivot_row.size());
      auto a = target.begin();
      auto b = pivot_row.begin();
      while (a != target.end() || b != pivot_row.end()) {
        if (b == pivot_row.end() || (a != target.end() && a->first < b->first)) {
          merged.push_back(*a++);
        } else if (a == target.end() || b->first < a->first) {
          Value v = field.sub_mul(Value{}, f, b->second);
          if (!field.zero(v))
            merged.emplace_back(b->first, std::move(v));
          ++b;
        } else {
          Value v = field.sub_mul(a->second, f, b->second);
          if (!field.zero(v))
            merged.emplace_back(a->first, std::move(v));
          ++a;
          ++b;
        }
      }
      target = std::move(merged);
      if (target.empty()) {
        active.erase(t);
      } else {
        for (auto const &e : target)
          col_rows[e.first].insert(t);
      }
    }
  }
  return rank;
}

} // namespace

std::size_t exact_rank(SparseMatrix const &m)
{
  return markowitz_rank(m.cols(), m.data(), RationalField{});
}

std::size_t modular_rank(SparseMatrix const &m, std::uint32_t prime)
{
  std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> rows;
  rows.reserve(m.rows());
  BigInt p = prime;
  for (auto const &r : m.data()) {
    std::vector<std::pair<std::size_t, std::uint64_t>> row;
    for (auto const &[col, value] : r) {
      if (value.get_den() != 1)
        throw ArgumentError("modular_rank: non-integer entry");
      BigInt residue;
      mpz_mod(residue.get_mpz_t(), value.get_num_mpz_t(), p.get_mpz_t());
      if (residue != 0)
        row.emplace_back(col, residue.get_ui());
    }
    rows.push_back(std::move(row));
  }
  return markowitz_rank(m.cols(), std::move(rows), PrimeField{prime});
}

RankReport screened_rank(SparseMatrix const &m)
{
  RankReport report;
  report.modular[0] = modular_rank(m, screen_primes[0]);
  report.modular[1] = modular_rank(m, screen_primes[1]);
  report.exact = exact_rank(m);
  report.modular_agreed =
    report.modular[0] == report.exact && report.modular[1] == report.exact;
  return report;
}

EchelonBasis::EchelonBasis(std::size_t cols, std::vector<std::size_t> priority)
  : cols_(cols), priority_(std::move(priority)), column_at_(cols)
{
  if (priority_.size() != cols_)
    throw ArgumentError("echelon basis: priority size mismatch");
  std::vector<bool> used(cols_, false);
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t pos = priority_[c];
    if (pos >= cols_ || used[pos])
      throw ArgumentError("echelon basis: priority is not a permutation");
    used[pos] = true;
    column_at_[pos] = c;
  }
}

EchelonBasis::Keyed EchelonBasis::keyed(SparseRow const &row) const
{
  Keyed v;
  for (auto const &[col, value] : row) {
    if (col >= cols_)
      throw ArgumentError("echelon basis: column out of range");
    if (value != 0)
      v[priority_[col]] += value;
  }
  std::erase_if(v, [](auto const &e) { return e.second == 0; });
  return v;
}

SparseRow EchelonBasis::unkeyed(Keyed const &v) const
{
  SparseRow row;
  for (auto const &[pos, value] : v)
    row.emplace_back(column_at_[pos], value);
  std::sort(row.begin(), row.end(),
            [](auto const &a, auto const &b) { return a.first < b.first; });
  return row;
}

void EchelonBasis::reduce_in_place(Keyed &v) const
{
  // Each pivot row only has entries after its pivot, so one ordered sweep
  // clears every pivot position.
  for (auto it = v.begin(); it != v.end();) {
    if (it->second == 0) {
      it = v.erase(it);
      continue;
    }
    auto piv = pivots_.find(it->first);
    if (piv == pivots_.end()) {
      ++it;
      continue;
    }
    Rational f = it->second;
    for (auto const &[pos, value] : piv->second)
      if (pos != it->first)
        v[pos] -= f * value;
    it = v.erase(it);
  }
}

bool EchelonBasis::insert(SparseRow const &row)
{
  Keyed v = keyed(row);
  reduce_in_place(v);
  if (v.empty())
    return false;
  Rational lead = v.begin()->second;
  for (auto &[pos, value] : v)
    value /= lead;
  std::size_t pos = v.begin()->first;
  pivots_.emplace(pos, std::move(v));
  return true;
}

SparseRow EchelonBasis::reduce(SparseRow const &row) const
{
  Keyed v = keyed(row);
  reduce_in_place(v);
  return unkeyed(v);
}

std::vector<std::size_t> EchelonBasis::pivot_columns() const
{
  std::vector<std::size_t> out;
  for (auto const &[pos, row] : pivots_)
    out.push_back(column_at_[pos]);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace psigma
