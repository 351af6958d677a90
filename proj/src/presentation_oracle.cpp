#include "psigma/presentation_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "psigma/errors.hpp"

namespace psigma::oracle {

int sort_wedge(std::vector<Generator> &factors)
{
  int sign = 1;
  for (std::size_t a = 1; a < factors.size(); ++a)
    for (std::size_t b = a; b > 0 && factors[b] <= factors[b - 1]; --b) {
      if (factors[b] == factors[b - 1])
        return 0;
      std::swap(factors[b], factors[b - 1]);
      sign = -sign;
    }
  return sign;
}

namespace {

std::vector<Generator> all_generators(int n)
{
  std::vector<Generator> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j)
        gens.push_back({i, j});
  return gens;
}

void check_caps(int n, int k, Limits const &limits)
{
  if (n > limits.oracle_max_n || k > limits.oracle_max_k)
    throw ResourceLimitError("presentation oracle: (n, k) = (" + std::to_string(n) +
                             ", " + std::to_string(k) + ") exceeds the cap (" +
                             std::to_string(limits.oracle_max_n) + ", " +
                             std::to_string(limits.oracle_max_k) + ")");
  if (n < 1 || k < 0)
    throw ArgumentError("presentation oracle: need n >= 1, k >= 0");
}

std::vector<Monomial> subsets(std::vector<Generator> const &gens, int k)
{
  std::vector<Monomial> out;
  if (k < 0 || static_cast<std::size_t>(k) > gens.size())
    return out;
  Monomial cur;
  auto rec = [&](auto &self, std::size_t start) -> void {
    if (cur.size() == static_cast<std::size_t>(k)) {
      out.push_back(cur);
      return;
    }
    for (std::size_t g = start; g < gens.size(); ++g) {
      cur.push_back(gens[g]);
      self(self, g + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

bool forest_monomial(int n, Monomial const &m)
{
  std::vector<int> parent(static_cast<std::size_t>(n), no_parent);
  for (auto const &g : m) {
    if (parent[static_cast<std::size_t>(g.i)] != no_parent)
      return false;
    parent[static_cast<std::size_t>(g.i)] = g.j;
  }
  for (int v = 0; v < n; ++v) {
    int x = v;
    for (int steps = 0; x != no_parent; ++steps) {
      if (steps > n)
        return false;
      x = parent[static_cast<std::size_t>(x)];
    }
  }
  return true;
}

} // namespace

MonomialBasis::MonomialBasis(int n, int k)
  : n_(n), k_(k), monomials_(subsets(all_generators(n), k))
{
  forest_.reserve(monomials_.size());
  for (std::size_t c = 0; c < monomials_.size(); ++c) {
    columns_.emplace(monomials_[c], c);
    forest_.push_back(forest_monomial(n, monomials_[c]));
  }
}

std::optional<std::size_t> MonomialBasis::column_of(Monomial const &m) const
{
  auto it = columns_.find(m);
  if (it == columns_.end())
    return std::nullopt;
  return it->second;
}

RootedForest MonomialBasis::forest(std::size_t c) const
{
  if (!forest_[c])
    throw CyclicProductError("monomial is not a forest");
  std::vector<int> parent(static_cast<std::size_t>(n_), no_parent);
  for (auto const &g : monomials_[c])
    parent[static_cast<std::size_t>(g.i)] = g.j;
  return RootedForest(std::move(parent));
}

std::size_t MonomialBasis::column_of(RootedForest const &f) const
{
  Monomial m;
  for (auto [i, j] : to_wedge(f).factors)
    m.push_back({i, j});
  auto c = column_of(m);
  if (!c)
    throw ArgumentError("forest " + f.dump() + " is not in this basis");
  return *c;
}

RelationMatrix build_relation_matrix(int n, int k, Limits const &limits)
{
  check_caps(n, k, limits);
  if (k < 2)
    throw ArgumentError("build_relation_matrix: relations start in degree 2");

  struct Term {
    int coeff;
    Generator a;
    Generator b;
  };
  std::vector<std::vector<Term>> quadratic;
  std::size_t squares = 0, triangles = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      quadratic.push_back({{1, {i, j}, {j, i}}});
      ++squares;
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        if (i == j || j == l || i == l)
          continue;
        // l plays the role of the third index k.
        quadratic.push_back({{1, {l, j}, {j, i}}, {-1, {l, j}, {l, i}}, {1, {i, j}, {l, i}}});
        ++triangles;
      }

  RelationMatrix out{n, k, squares, triangles, MonomialBasis(n, k), SparseMatrix()};
  out.matrix = SparseMatrix(out.columns.size());
  auto cofactors = subsets(all_generators(n), k - 2);
  for (auto const &relation : quadratic) {
    for (auto const &m : cofactors) {
      SparseRow row;
      for (auto const &t : relation) {
        std::vector<Generator> factors{t.a, t.b};
        factors.insert(factors.end(), m.begin(), m.end());
        int sign = sort_wedge(factors);
        if (sign == 0)
          continue;
        auto col = out.columns.column_of(factors);
        row.emplace_back(*col, Rational(t.coeff * sign));
      }
      out.matrix.add_row(std::move(row));
    }
  }
  return out;
}

QuotientReport quotient_rank_report(int n, int k, Limits const &limits)
{
  check_caps(n, k, limits);
  QuotientReport report;
  report.monomials = MonomialBasis(n, k).size();
  if (k >= 2) {
    auto rel = build_relation_matrix(n, k, limits);
    report.relations = screened_rank(rel.matrix);
  }
  report.quotient = report.monomials - report.relations.exact;
  return report;
}

std::size_t quotient_rank(int n, int k, Limits const &limits)
{
  return quotient_rank_report(n, k, limits).quotient;
}

bool verify_forest_basis(int n, int k, Limits const &limits)
{
  check_caps(n, k, limits);
  MonomialBasis basis(n, k);
  SparseMatrix stacked(basis.size());
  std::size_t relation_rank = 0;
  if (k >= 2) {
    auto rel = build_relation_matrix(n, k, limits);
    relation_rank = exact_rank(rel.matrix);
    for (auto const &row : rel.matrix.data())
      stacked.add_row(row);
  }
  std::size_t forests = 0;
  for (std::size_t c = 0; c < basis.size(); ++c)
    if (basis.is_forest(c)) {
      stacked.add_row({{c, Rational(1)}});
      ++forests;
    }
  std::size_t quotient = basis.size() - relation_rank;
  return forests == quotient && exact_rank(stacked) == relation_rank + forests;
}

PresentedAlgebra::PresentedAlgebra(int n, int k, Limits const &limits) : n_(n), k_(k)
{
  check_caps(n, k, limits);
  basis_.emplace(n, k);
  std::size_t cols = basis_->size();

  // Non-forest columns first, each group in monomial order.
  std::vector<std::size_t> priority(cols);
  std::size_t pos = 0;
  for (bool forest_group : {false, true})
    for (std::size_t c = 0; c < cols; ++c)
      if (basis_->is_forest(c) == forest_group)
        priority[c] = pos++;
  echelon_.emplace(cols, std::move(priority));

  if (k >= 2) {
    auto rel = build_relation_matrix(n, k, limits);
    for (auto const &row : rel.matrix.data())
      echelon_->insert(row);
  }

  std::size_t non_forest = 0;
  for (std::size_t c = 0; c < cols; ++c)
    if (!basis_->is_forest(c))
      ++non_forest;
  auto pivots = echelon_->pivot_columns();
  complement_ = pivots.size() == non_forest &&
                std::none_of(pivots.begin(), pivots.end(),
                             [&](std::size_t c) { return basis_->is_forest(c); });
}

NormalForm PresentedAlgebra::normal_form(SparseRow const &element) const
{
  if (!complement_)
    throw ConsistencyError("presented algebra: forests do not complement the relations");
  NormalForm out;
  for (auto const &[col, value] : echelon_->reduce(element))
    out.emplace(basis_->forest(col), value);
  return out;
}

NormalForm PresentedAlgebra::normal_form(std::vector<Generator> factors, int coeff) const
{
  if (factors.size() != static_cast<std::size_t>(k_))
    throw ArgumentError("normal_form: degree mismatch");
  int sign = sort_wedge(factors);
  if (sign == 0 || coeff == 0)
    return {};
  return normal_form(SparseRow{{*basis_->column_of(factors), Rational(sign * coeff)}});
}

GeneratorWord generator_word(SignedPermutation const &g)
{
  GeneratorWord word;
  int n = g.rank();
  for (int i = 0; i < n; ++i)
    if (g.sign(i) < 0)
      word.flips.push_back(i);
  // perm = cur o tau_i at a descent i of cur, and cur has one inversion
  // fewer; the first transposition found is the first one applied.
  std::vector<int> cur = g.perm();
  for (;;) {
    int descent = -1;
    for (int i = 0; i + 1 < n; ++i)
      if (cur[static_cast<std::size_t>(i)] > cur[static_cast<std::size_t>(i + 1)]) {
        descent = i;
        break;
      }
    if (descent < 0)
      break;
    std::swap(cur[static_cast<std::size_t>(descent)], cur[static_cast<std::size_t>(descent + 1)]);
    word.transpositions.push_back(descent);
  }
  return word;
}

NormalForm oracle_action(PresentedAlgebra const &algebra, SignedPermutation const &g,
                         WedgeWord const &w)
{
  if (g.rank() != algebra.rank() ||
      w.factors.size() != static_cast<std::size_t>(algebra.degree()))
    throw ArgumentError("oracle_action: rank or degree mismatch");
  std::vector<Generator> factors;
  for (auto [i, j] : w.factors)
    factors.push_back({i, j});
  int coeff = 1;

  auto word = generator_word(g);
  for (int flip : word.flips)
    for (auto const &f : factors)
      if (f.j == flip)
        coeff = -coeff;
  for (int t : word.transpositions) {
    auto swap = [t](int x) { return x == t ? t + 1 : x == t + 1 ? t : x; };
    for (auto &f : factors)
      f = {swap(f.i), swap(f.j)};
  }
  return algebra.normal_form(std::move(factors), coeff);
}

bool reduces_to_zero(PresentedAlgebra const &algebra,
                     std::vector<std::pair<int, int>> const &factors)
{
  std::vector<Generator> gens;
  for (auto [i, j] : factors)
    gens.push_back({i, j});
  return algebra.normal_form(std::move(gens)).empty();
}

} // namespace psigma::oracle
