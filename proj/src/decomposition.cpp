#include "psigma/decomposition.hpp"

#include <algorithm>

#include "psigma/errors.hpp"
#include "psigma/forest.hpp"

namespace psigma {

std::map<StableName, long long> MultiplicityVector::stable() const
{
  std::map<StableName, long long> out;
  for (auto const &e : entries)
    out[e.name] += e.multiplicity;
  return out;
}

long long MultiplicityVector::multiplicity(StableName const &name) const
{
  for (auto const &e : entries)
    if (e.name == name)
      return e.multiplicity;
  return 0;
}

BigInt MultiplicityVector::total_dimension() const
{
  BigInt sum = 0;
  for (auto const &e : entries)
    sum += BigInt(static_cast<long>(e.multiplicity)) * e.padded_dim;
  return sum;
}

long long MultiplicityVector::norm_squared() const
{
  long long sum = 0;
  for (auto const &e : entries)
    sum += e.multiplicity * e.multiplicity;
  return sum;
}

BigInt irreducible_dimension(GroupKind kind, DoublePartition const &label)
{
  if (kind == GroupKind::symmetric)
    return label.plus.dimension();
  return binomial(label.size(), label.plus.size()) * label.plus.dimension() *
         label.minus.dimension();
}

namespace {

MultiplicityEntry make_entry(GroupKind kind, DoublePartition const &full, long long mult)
{
  MultiplicityEntry e;
  e.name = StableName::of(kind, full);
  e.multiplicity = mult;
  e.padded_dim = irreducible_dimension(kind, full);
  e.raw = !e.name.valid_at(full.size()) || e.name.padded(full.size()) != full;
  return e;
}

void sort_entries(MultiplicityVector &v)
{
  std::sort(v.entries.begin(), v.entries.end(),
            [](auto const &a, auto const &b) { return a.name < b.name; });
}

} // namespace

MultiplicityVector decompose_class_function(CharacterTable const &table,
                                            ClassFunction const &chi, int k)
{
  MultiplicityVector out{table.kind(), table.rank(), k, {}};
  for (std::size_t i = 0; i < table.size(); ++i) {
    Rational c = inner_product(table.classes(), chi, table.character(i));
    if (!is_integer(c) || c < 0)
      throw ConsistencyError("multiplicity of " + table.labels()[i].str() + " is " +
                             c.get_str());
    if (c == 0)
      continue;
    BigInt m = c.get_num();
    if (!m.fits_slong_p())
      throw ConsistencyError("multiplicity out of range");
    out.entries.push_back(make_entry(table.kind(), table.labels()[i], m.get_si()));
  }
  sort_entries(out);
  return out;
}

MultiplicityVector decompose(int n, int k, GroupKind kind, TableStore &tables,
                             TraceMethod method)
{
  if (n < 1)
    throw ArgumentError("decompose: n must be positive");
  if (k < 0)
    throw ArgumentError("decompose: k must be non-negative");
  if (n > tables.limits().max_n)
    throw ResourceLimitError("decompose: n=" + std::to_string(n) +
                             " exceeds the configured maximum " +
                             std::to_string(tables.limits().max_n));
  CharacterTable const &table = tables.get(kind, n);
  ClassFunction chi =
    cohomology_character(kind, n, k, tables.limits(), method, tables.threads());
  MultiplicityVector out = decompose_class_function(table, chi, k);

  BigInt dim = forest_count(n, k);
  if (out.total_dimension() != dim)
    throw ConsistencyError("decompose: dimensions sum to " +
                           out.total_dimension().get_str() + ", expected " +
                           dim.get_str());
  Rational norm = inner_product(table.classes(), chi, chi);
  if (norm != Rational(static_cast<long>(out.norm_squared())))
    throw ConsistencyError("decompose: <chi,chi> = " + norm.get_str() +
                           " but multiplicities give " +
                           std::to_string(out.norm_squared()));
  return out;
}

StabilityReport stability_scan(int k, GroupKind kind, int n_max, TableStore &tables)
{
  if (k < 0)
    throw ArgumentError("stability_scan: k must be non-negative");
  StabilityReport report;
  report.kind = kind;
  report.k = k;
  report.n_min = k + 1;
  report.n_max = n_max;
  report.bound = 4 * k;
  if (n_max < report.n_min)
    throw ArgumentError("stability_scan: n_max must be at least k + 1");

  std::vector<std::map<StableName, long long>> stable;
  for (int n = report.n_min; n <= n_max; ++n) {
    report.vectors.push_back(decompose(n, k, kind, tables));
    stable.push_back(report.vectors.back().stable());
  }

  std::size_t from = stable.size() - 1;
  while (from > 0 && stable[from - 1] == stable.back())
    --from;
  if (from + 1 < stable.size())
    report.stable_from = report.n_min + static_cast<int>(from);

  report.provisional = n_max < report.bound;
  // A stabilization point can only be confirmed one step later, and the
  // range starts at k + 1, which exceeds 4k only for k = 0.
  int allowed = std::max(report.bound, report.n_min);
  if (n_max > allowed)
    report.violation = !report.stable_from || *report.stable_from > allowed;
  return report;
}

MultiplicityVector pieri_induce(DoublePartition const &lambda, int n)
{
  int r = lambda.size();
  if (n < r)
    throw ArgumentError("pieri_induce: n=" + std::to_string(n) + " is below |lambda|=" +
                        std::to_string(r));
  int extra = n - r;
  std::vector<int> heights = lambda.plus.conjugate().parts();
  std::size_t cols = heights.size();

  MultiplicityVector out{GroupKind::hyperoctahedral, n, r, {}};
  std::vector<int> grown(heights);
  auto rec = [&](auto &self, std::size_t j, bool prev_taken, int used) -> void {
    if (j == cols) {
      int fresh = extra - used;
      std::vector<int> h(grown);
      h.insert(h.end(), static_cast<std::size_t>(fresh), 1);
      DoublePartition nu{Partition(std::move(h)).conjugate(), lambda.minus};
      out.entries.push_back(make_entry(GroupKind::hyperoctahedral, nu, 1));
      return;
    }
    self(self, j + 1, false, used);
    bool allowed = j == 0 || prev_taken || heights[j - 1] > heights[j];
    if (allowed && used < extra) {
      ++grown[j];
      self(self, j + 1, true, used + 1);
      --grown[j];
    }
  };
  rec(rec, 0, false, 0);
  sort_entries(out);
  return out;
}

MultiplicityVector pieri_induce(StableName const &name, int r, int n)
{
  if (name.kind != GroupKind::hyperoctahedral)
    throw ArgumentError("pieri_induce: needs a W_n name");
  return pieri_induce(name.padded(r), n);
}

MultiplicityVector induced_by_fusion(DoublePartition const &lambda, int n,
                                     TableStore &tables)
{
  int r = lambda.size();
  if (n < r)
    throw ArgumentError("induced_by_fusion: n below |lambda|");
  auto const kind = GroupKind::hyperoctahedral;
  CharacterTable const &left = tables.get(kind, r);
  CharacterTable const &right = tables.get(kind, n - r);
  CharacterTable const &target = tables.get(kind, n);

  ClassFunction phi1 = left.character(left.index_of(lambda));
  ClassFunction phi2{kind, n - r, std::vector<Rational>(right.classes().size(), Rational(1))};
  ClassFunction ind = induce_product(target.classes(), left, phi1, right, phi2);
  return decompose_class_function(target, ind, r);
}

bool induction_character_check(DoublePartition const &lambda, int n, TableStore &tables)
{
  int r = lambda.size();
  MultiplicityVector pieri = pieri_induce(lambda, n);
  if (pieri.stable() != induced_by_fusion(lambda, n, tables).stable())
    return false;
  if (n - 1 >= 2 * r && n - 1 >= r)
    return pieri.stable() == pieri_induce(lambda, n - 1).stable();
  return true;
}

MultiplicityVector restrict_decomposition(MultiplicityVector const &wn,
                                          TableStore &tables)
{
  if (wn.kind != GroupKind::hyperoctahedral)
    throw ArgumentError("restrict_decomposition: input must be a W_n decomposition");
  int n = wn.n;
  CharacterTable const &wt = tables.get(GroupKind::hyperoctahedral, n);
  CharacterTable const &st = tables.get(GroupKind::symmetric, n);

  ClassFunction sum{GroupKind::symmetric, n,
                    std::vector<Rational>(st.classes().size(), Rational(0))};
  for (auto const &e : wn.entries) {
    ClassFunction res = restrict_to_symmetric(wt.character(wt.index_of(e.name.padded(n))),
                                              wt.classes(), st.classes());
    for (std::size_t c = 0; c < sum.values.size(); ++c)
      sum.values[c] += Rational(static_cast<long>(e.multiplicity)) * res[c];
  }
  return decompose_class_function(st, sum, wn.k);
}

} // namespace psigma
