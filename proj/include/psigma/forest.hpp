#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "psigma/bigint.hpp"

namespace psigma {

inline constexpr int no_parent = -1;

/// Acyclic partial parent map on {0..n-1}. An entry child -> parent is the
/// edge child <- parent, i.e. the generator alpha*_{child,parent} of H^1.
/// With k edges the forest has n-k trees and is one basis vector of H^k.
///
/// Ordering is lexicographic on the parent vector with no_parent smallest;
/// that order is the basis order.
class RootedForest {
public:
  RootedForest() = default;
  /// Throws ArgumentError on out-of-range entries and CyclicProductError
  /// when following parents does not terminate.
  explicit RootedForest(std::vector<int> parent);

  static RootedForest isolated(int n);
  /// Edges given as (child, parent) pairs.
  static RootedForest from_edges(int n, std::vector<std::pair<int, int>> const &edges);

  int rank() const { return static_cast<int>(parent_.size()); }
  int degree() const { return edges_; }
  int tree_count() const { return rank() - edges_; }
  int parent(int v) const { return parent_[static_cast<std::size_t>(v)]; }
  bool is_root(int v) const { return parent(v) == no_parent; }
  std::vector<int> const &parents() const { return parent_; }

  /// Number of children of each vertex, i.e. how often it is a second index.
  std::vector<int> child_counts() const;
  /// True when v is neither a child nor a parent.
  bool isolated_vertex(int v) const;

  /// "n k p(1) ... p(n)", 1-based, 0 marking roots.
  std::string dump() const;
  static RootedForest parse_dump(std::string_view line);

  bool operator==(RootedForest const &) const = default;
  std::strong_ordering operator<=>(RootedForest const &other) const;

private:
  std::vector<int> parent_;
  int edges_ = 0;
};

/// Factors (child, parent) of alpha*_{child,parent}, children strictly
/// increasing. This ordering is the +1 orientation of the basis vector.
struct WedgeWord {
  std::vector<std::pair<int, int>> factors;

  bool operator==(WedgeWord const &) const = default;
};

WedgeWord to_wedge(RootedForest const &f);
/// Throws CyclicProductError when the word's index graph has a directed
/// cycle and ArgumentError for a malformed word (unsorted or repeated
/// children, i == j, out of range).
RootedForest from_wedge(int n, WedgeWord const &w);

/// Same parent map at rank n+1; the new vertex is isolated.
RootedForest stabilize(RootedForest const &f);

/// binomial(n-1, k) * n^k for k <= n-1, else 0.
BigInt forest_count(int n, int k);

namespace detail {

/// Union-find with undo, used to reject cycles while parents are assigned.
class RollbackUnionFind {
public:
  explicit RollbackUnionFind(int n) : up_(static_cast<std::size_t>(n)), size_(up_.size(), 1)
  {
    for (std::size_t i = 0; i < up_.size(); ++i)
      up_[i] = static_cast<int>(i);
  }

  int find(int x) const
  {
    while (up_[static_cast<std::size_t>(x)] != x)
      x = up_[static_cast<std::size_t>(x)];
    return x;
  }

  /// Caller guarantees ra != rb (both roots). Returns the absorbed root.
  int unite_roots(int ra, int rb)
  {
    if (size_[static_cast<std::size_t>(ra)] < size_[static_cast<std::size_t>(rb)])
      std::swap(ra, rb);
    up_[static_cast<std::size_t>(rb)] = ra;
    size_[static_cast<std::size_t>(ra)] += size_[static_cast<std::size_t>(rb)];
    return rb;
  }

  void undo(int absorbed)
  {
    int into = up_[static_cast<std::size_t>(absorbed)];
    size_[static_cast<std::size_t>(into)] -= size_[static_cast<std::size_t>(absorbed)];
    up_[static_cast<std::size_t>(absorbed)] = absorbed;
  }

private:
  std::vector<int> up_;
  std::vector<int> size_;
};

template <typename Visitor>
struct ForestWalker {
  int n;
  int k;
  Visitor &visit;
  std::vector<int> parent;
  RollbackUnionFind uf;

  ForestWalker(int n_, int k_, Visitor &v)
    : n(n_), k(k_), visit(v), parent(static_cast<std::size_t>(n_), no_parent), uf(n_)
  {}

  // A parent map has a directed cycle iff its underlying undirected graph
  // does, so undirected union-find suffices.
  void run(int v, int edges)
  {
    if (v == n) {
      visit(std::span<int const>(parent));
      return;
    }
    int left = n - v;
    int need = k - edges;
    if (need < left) {
      parent[static_cast<std::size_t>(v)] = no_parent;
      run(v + 1, edges);
    }
    if (need > 0) {
      int rv = uf.find(v);
      for (int p = 0; p < n; ++p) {
        if (p == v)
          continue;
        int rp = uf.find(p);
        if (rp == rv)
          continue;
        int absorbed = uf.unite_roots(rv, rp);
        parent[static_cast<std::size_t>(v)] = p;
        run(v + 1, edges + 1);
        uf.undo(absorbed);
      }
      parent[static_cast<std::size_t>(v)] = no_parent;
    }
  }
};

} // namespace detail

/// Streams every forest with k edges on n vertices exactly once, in basis
/// order, as a parent span valid only for the duration of the call. Vertices
/// are visited in order and each either stays a root or takes a parent that
/// is not already in its component. Nothing is emitted for k >= n, k < 0.
template <typename Visitor>
void for_each_forest(int n, int k, Visitor &&visit)
{
  if (n < 1 || k < 0 || k >= n)
    return;
  detail::ForestWalker<std::remove_reference_t<Visitor>> walker(n, k, visit);
  walker.run(0, 0);
}

/// Materialized for_each_forest, in basis order.
std::vector<RootedForest> enumerate_forests(int n, int k);

/// Count by streaming enumeration.
std::uint64_t count_forests(int n, int k);

} // namespace psigma
