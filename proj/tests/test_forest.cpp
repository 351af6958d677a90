#include "doctest.h"

#include <map>

#include "psigma/errors.hpp"
#include "psigma/forest.hpp"

using namespace psigma;

namespace {

// Every map v -> parent(v) in {none} u [n] \ {v}, keeping the acyclic ones.
std::map<int, long> brute_force_counts(int n)
{
  std::map<int, long> counts;
  std::vector<int> parent(static_cast<std::size_t>(n), no_parent);
  auto acyclic = [&] {
    for (int v = 0; v < n; ++v) {
      int x = v;
      for (int steps = 0; x != no_parent; ++steps) {
        if (steps > n)
          return false;
        x = parent[static_cast<std::size_t>(x)];
      }
    }
    return true;
  };
  auto rec = [&](auto &self, int v, int edges) -> void {
    if (v == n) {
      if (acyclic())
        ++counts[edges];
      return;
    }
    parent[static_cast<std::size_t>(v)] = no_parent;
    self(self, v + 1, edges);
    for (int p = 0; p < n; ++p)
      if (p != v) {
        parent[static_cast<std::size_t>(v)] = p;
        self(self, v + 1, edges + 1);
      }
    parent[static_cast<std::size_t>(v)] = no_parent;
  };
  rec(rec, 0, 0);
  return counts;
}

} // namespace

TEST_CASE("forest counts agree with brute force and the formula")
{
  for (int n = 1; n <= 6; ++n) {
    auto counts = brute_force_counts(n);
    for (int k = 0; k <= n; ++k) {
      CHECK(count_forests(n, k) == static_cast<std::uint64_t>(counts[k]));
      CHECK(forest_count(n, k) == counts[k]);
    }
  }
  CHECK(forest_count(6, 4) == 6480);
  CHECK(forest_count(3, 0) == 1);
  CHECK(forest_count(4, 5) == 0);
  CHECK(count_forests(4, 5) == 0);
}

TEST_CASE("enumeration is in strictly increasing basis order")
{
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k < n; ++k) {
      auto all = enumerate_forests(n, k);
      for (std::size_t i = 1; i < all.size(); ++i)
        CHECK(all[i - 1] < all[i]);
      for (auto const &f : all) {
        CHECK(f.degree() == k);
        CHECK(f.tree_count() == n - k);
      }
    }
}

TEST_CASE("construction rejects cycles and junk")
{
  CHECK_THROWS_AS(RootedForest({1, 0}), CyclicProductError);
  CHECK_THROWS_AS(RootedForest({1, 2, 0}), CyclicProductError);
  CHECK_THROWS_AS(RootedForest({0}), ArgumentError);
  CHECK_THROWS_AS(RootedForest({5, no_parent}), ArgumentError);
  CHECK_THROWS_AS(RootedForest::from_edges(3, {{0, 1}, {0, 2}}), ArgumentError);
}

TEST_CASE("dump format")
{
  auto f = RootedForest::from_edges(4, {{0, 1}, {2, 1}});
  CHECK(f.dump() == "4 2 2 0 2 0");
  CHECK(RootedForest::parse_dump("4 2 2 0 2 0") == f);
  CHECK_THROWS_AS(RootedForest::parse_dump("4 3 2 0 2 0"), ArgumentError);
  CHECK_THROWS_AS(RootedForest::parse_dump("4 2 2 0 2"), ArgumentError);
  for (auto const &g : enumerate_forests(5, 3))
    CHECK(RootedForest::parse_dump(g.dump()) == g);
}

TEST_CASE("wedge words")
{
  auto f = RootedForest::from_edges(4, {{3, 0}, {1, 0}});
  WedgeWord w = to_wedge(f);
  CHECK(w.factors == std::vector<std::pair<int, int>>{{1, 0}, {3, 0}});
  CHECK(from_wedge(4, w) == f);
  CHECK_THROWS_AS(from_wedge(3, WedgeWord{{{0, 1}, {1, 0}}}), CyclicProductError);
  CHECK_THROWS_AS(from_wedge(3, WedgeWord{{{0, 1}, {1, 2}, {2, 0}}}), CyclicProductError);
  CHECK_THROWS_AS(from_wedge(3, WedgeWord{{{1, 0}, {0, 2}}}), ArgumentError);
  CHECK_THROWS_AS(from_wedge(3, WedgeWord{{{1, 1}}}), ArgumentError);
  CHECK_THROWS_AS(from_wedge(3, WedgeWord{{{1, 5}}}), ArgumentError);
}

TEST_CASE("stabilization and child data")
{
  auto f = RootedForest::from_edges(3, {{0, 1}, {2, 1}});
  auto g = stabilize(f);
  CHECK(g.rank() == 4);
  CHECK(g.degree() == 2);
  CHECK(g.isolated_vertex(3));
  CHECK_FALSE(g.isolated_vertex(1));
  CHECK(g.child_counts() == std::vector<int>{0, 2, 0, 0});
  CHECK(RootedForest::isolated(3).degree() == 0);
}
