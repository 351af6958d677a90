#include "psigma/forest.hpp"

#include <algorithm>
#include <sstream>

#include "psigma/errors.hpp"

namespace psigma {

RootedForest::RootedForest(std::vector<int> parent) : parent_(std::move(parent))
{
  int n = rank();
  for (int v = 0; v < n; ++v) {
    int p = parent_[static_cast<std::size_t>(v)];
    if (p == no_parent)
      continue;
    if (p < 0 || p >= n || p == v)
      throw ArgumentError("forest: bad parent entry");
    ++edges_;
  }
  // Every walk must reach a root within n steps.
  for (int v = 0; v < n; ++v) {
    int x = v;
    for (int steps = 0; x != no_parent; ++steps) {
      if (steps > n)
        throw CyclicProductError("forest: parent map has a cycle");
      x = parent_[static_cast<std::size_t>(x)];
    }
  }
}

RootedForest RootedForest::isolated(int n)
{
  return RootedForest(std::vector<int>(static_cast<std::size_t>(n), no_parent));
}

RootedForest RootedForest::from_edges(int n,
                                      std::vector<std::pair<int, int>> const &edges)
{
  std::vector<int> parent(static_cast<std::size_t>(n), no_parent);
  for (auto [child, p] : edges) {
    if (child < 0 || child >= n)
      throw ArgumentError("forest: child out of range");
    if (parent[static_cast<std::size_t>(child)] != no_parent)
      throw ArgumentError("forest: vertex has two parents");
    parent[static_cast<std::size_t>(child)] = p;
  }
  return RootedForest(std::move(parent));
}

std::vector<int> RootedForest::child_counts() const
{
  std::vector<int> out(parent_.size(), 0);
  for (int p : parent_)
    if (p != no_parent)
      ++out[static_cast<std::size_t>(p)];
  return out;
}

bool RootedForest::isolated_vertex(int v) const
{
  return is_root(v) && std::find(parent_.begin(), parent_.end(), v) == parent_.end();
}

std::string RootedForest::dump() const
{
  std::string s = std::to_string(rank()) + " " + std::to_string(degree());
  for (int p : parent_)
    s += " " + std::to_string(p + 1);
  return s;
}

RootedForest RootedForest::parse_dump(std::string_view line)
{
  std::istringstream in{std::string(line)};
  int n = 0, k = 0;
  if (!(in >> n >> k) || n < 0)
    throw ArgumentError("forest dump: bad header");
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (auto &p : parent) {
    if (!(in >> p))
      throw ArgumentError("forest dump: too few entries");
    p -= 1;
  }
  std::string extra;
  if (in >> extra)
    throw ArgumentError("forest dump: trailing data");
  RootedForest f(std::move(parent));
  if (f.degree() != k)
    throw ArgumentError("forest dump: edge count does not match k");
  return f;
}

std::strong_ordering RootedForest::operator<=>(RootedForest const &other) const
{
  if (auto c = rank() <=> other.rank(); c != 0)
    return c;
  return std::lexicographical_compare_three_way(parent_.begin(), parent_.end(),
                                                other.parent_.begin(),
                                                other.parent_.end());
}

WedgeWord to_wedge(RootedForest const &f)
{
  WedgeWord w;
  for (int v = 0; v < f.rank(); ++v)
    if (!f.is_root(v))
      w.factors.emplace_back(v, f.parent(v));
  return w;
}

RootedForest from_wedge(int n, WedgeWord const &w)
{
  std::vector<int> parent(static_cast<std::size_t>(n), no_parent);
  int last = -1;
  for (auto [i, j] : w.factors) {
    if (i <= last)
      throw ArgumentError("wedge word: first indices must strictly increase");
    if (i < 0 || j < 0 || i >= n || j >= n || i == j)
      throw ArgumentError("wedge word: bad generator index");
    parent[static_cast<std::size_t>(i)] = j;
    last = i;
  }
  return RootedForest(std::move(parent));
}

RootedForest stabilize(RootedForest const &f)
{
  auto parent = f.parents();
  parent.push_back(no_parent);
  return RootedForest(std::move(parent));
}

BigInt forest_count(int n, int k)
{
  if (n < 1 || k < 0 || k > n - 1)
    return 0;
  return binomial(n - 1, k) * power(n, static_cast<unsigned long>(k));
}

std::vector<RootedForest> enumerate_forests(int n, int k)
{
  std::vector<RootedForest> out;
  for_each_forest(n, k, [&](std::span<int const> parent) {
    out.emplace_back(std::vector<int>(parent.begin(), parent.end()));
  });
  return out;
}

std::uint64_t count_forests(int n, int k)
{
  std::uint64_t count = 0;
  for_each_forest(n, k, [&](std::span<int const>) { ++count; });
  return count;
}

} // namespace psigma
