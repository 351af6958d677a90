#include "psigma/class_table.hpp"

#include <string>

#include "psigma/errors.hpp"

namespace psigma {

BigInt group_order(GroupKind kind, int n)
{
  BigInt order = factorial(static_cast<unsigned>(n));
  if (kind == GroupKind::hyperoctahedral)
    order *= power(2, static_cast<unsigned long>(n));
  return order;
}

ConjClassTable::ConjClassTable(GroupKind kind, int n)
  : kind_(kind), n_(n), order_(psigma::group_order(kind, n < 0 ? 0 : n))
{
  if (n < 0)
    throw ArgumentError("class table: n must be non-negative");

  std::vector<DoublePartition> labels;
  if (kind == GroupKind::symmetric) {
    for (auto &p : enumerate_partitions(n))
      labels.push_back({std::move(p), {}});
  } else {
    labels = enumerate_double_partitions(n);
  }

  classes_.reserve(labels.size());
  for (auto &label : labels) {
    BigInt z = kind == GroupKind::symmetric ? label.plus.centralizer_order()
                                            : label.centralizer_order();
    BigInt size = order_ / z;
    auto rep = class_representative(label);
    index_.emplace(label, classes_.size());
    classes_.push_back({std::move(label), std::move(z), std::move(size),
                        std::move(rep)});
  }
}

std::size_t ConjClassTable::index_of(DoublePartition const &label) const
{
  auto it = index_.find(label);
  if (it == index_.end())
    throw ArgumentError("no class " + label.str() + " in table of rank " +
                        std::to_string(n_));
  return it->second;
}

std::size_t ConjClassTable::index_of(Partition const &label) const
{
  return index_of(DoublePartition{label, {}});
}

std::size_t ConjClassTable::index_of(SignedPermutation const &g) const
{
  if (g.rank() != n_)
    throw ArgumentError("class lookup: rank mismatch");
  if (kind_ == GroupKind::symmetric) {
    if (!g.unsigned_perm())
      throw ArgumentError("class lookup: signed element in an S_n table");
    return index_of(cycle_type(g));
  }
  return index_of(signed_cycle_type(g));
}

ConjClassTable class_table(GroupKind kind, int n, Limits const &limits)
{
  if (n > limits.max_n)
    throw ResourceLimitError("class table: n=" + std::to_string(n) +
                             " exceeds the configured maximum " +
                             std::to_string(limits.max_n));
  if (n < 0)
    throw ArgumentError("class table: n must be non-negative");
  return ConjClassTable(kind, n);
}

} // namespace psigma
